#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "raagbns/corpus.hpp"
#include "raagbns/graph.hpp"
#include "support/oracles.hpp"

using namespace raagbns;

namespace {

SimpleGraph make(std::vector<std::string> v, std::vector<std::pair<std::string, std::string>> e = {}) {
  return SimpleGraph(std::move(v), e);
}

VertexMask mask(const SimpleGraph& g, std::initializer_list<const char*> labels) {
  VertexMask m = 0;
  for (const char* l : labels) m |= bit(g.index_of(l));
  return m;
}

Component comp(const SimpleGraph& g, std::initializer_list<const char*> labels) { return Component{mask(g, labels)}; }

const SimpleGraph f3 = make({"a", "b", "c"});
const SimpleGraph f4 = make({"a", "b", "c", "d"});
const SimpleGraph k4 = graph_from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

}  // namespace

TEST_CASE("graph construction validates its input") {
  CHECK_THROWS_AS(make({"a", "a"}), InputError);
  CHECK_THROWS_AS(make({"a", "b"}, {{"a", "a"}}), InputError);
  CHECK_THROWS_AS(make({"a", "b"}, {{"a", "z"}}), InputError);
  CHECK_THROWS_AS(make({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  const auto g = make({"c", "a", "b"}, {{"c", "a"}});
  CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.adjacent(0, 2));
  CHECK(g.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 2}});
  CHECK(!g.find("z"));
}

TEST_CASE("links") {
  CHECK(link(f3, 0) == 0);
  const auto path = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(link(path, path.index_of("b")) == mask(path, {"a", "c"}));
  for (VertexId v = 0; v < 4; ++v) CHECK(popcount(link(k4, v)) == 3);
}

TEST_CASE("components of the complement of a star") {
  const auto cs = complement_components(f3, 0);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == comp(f3, {"b"}));
  CHECK(cs[1] == comp(f3, {"c"}));
  CHECK(complement_components(k4, 2).empty());
  const auto p = make({"a", "x", "b", "y", "c"}, {{"a", "x"}, {"x", "b"}, {"b", "y"}, {"y", "c"}});
  const auto pc = complement_components(p, p.index_of("a"));
  REQUIRE(pc.size() == 1);
  CHECK(pc[0] == comp(p, {"b", "y", "c"}));
}

TEST_CASE("pair classification") {
  const auto c3 = classify_pair(f3, 0, 1);
  CHECK(c3.dominating_a == comp(f3, {"b"}));
  CHECK(c3.dominating_b == comp(f3, {"a"}));
  CHECK(c3.shared == std::vector<Component>{comp(f3, {"c"})});
  CHECK(c3.subordinate_a.empty());
  CHECK(c3.subordinate_b.empty());

  const auto c4 = classify_pair(f4, 0, 1);
  CHECK(c4.shared == std::vector<Component>{comp(f4, {"c"}), comp(f4, {"d"})});

  // Two triangles on x with two pendants a, b on x.
  const auto g = make({"a", "b", "x", "p", "q", "r", "s"},
                      {{"x", "p"}, {"p", "q"}, {"q", "x"}, {"x", "r"}, {"r", "s"}, {"s", "x"}, {"a", "x"}, {"b", "x"}});
  const auto cg = classify_pair(g, g.index_of("a"), g.index_of("b"));
  CHECK(cg.shared == std::vector<Component>{comp(g, {"p", "q"}), comp(g, {"r", "s"})});
  CHECK(oracle::pair_classification_holds(g, g.index_of("a"), g.index_of("b")));

  CHECK_THROWS_AS(classify_pair(k4, 0, 1), InputError);
  CHECK_THROWS_AS(classify_pair(f3, 1, 1), InputError);
}

TEST_CASE("SIL pairs") {
  CHECK(is_sil_pair(f3, 0, 1));
  const auto p = make({"a", "x", "b"}, {{"a", "x"}, {"x", "b"}});
  CHECK(!is_sil_pair(p, p.index_of("a"), p.index_of("b")));
  CHECK(!is_sil_pair_by_links(p, p.index_of("a"), p.index_of("b")));
  CHECK(!is_sil_pair(p, p.index_of("a"), p.index_of("x")));
  CHECK(!is_sil_pair(f3, 2, 2));
}

TEST_CASE("support graphs of the free groups") {
  const auto d3 = support_graph(f3, 0);
  CHECK(d3.nodes.size() == 2);
  CHECK(d3.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  const auto d4 = support_graph(f4, 0);
  CHECK(d4.nodes.size() == 3);
  CHECK(d4.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(support_graph(k4, 1).nodes.empty());
}

TEST_CASE("forest certificates") {
  const auto single = forest_certificate(support_graph(f3, 0));
  REQUIRE(std::holds_alternative<ForestData>(single));
  CHECK(std::get<ForestData>(single).trees.size() == 1);

  const auto tri = forest_certificate(support_graph(f4, 0));
  REQUIRE(std::holds_alternative<LoopWitness>(tri));
  CHECK(std::get<LoopWitness>(tri).cycle == std::vector<std::size_t>{0, 1, 2});

  const auto empty = forest_certificate(support_graph(k4, 0));
  REQUIRE(std::holds_alternative<ForestData>(empty));
  CHECK(std::get<ForestData>(empty).trees.empty());
}

TEST_CASE("center rank") {
  CHECK(center_rank(k4) == 4);
  CHECK(center_rank(f4) == 0);
  CHECK(center_rank(make({"a", "b"})) == 0);
  const auto star = make({"c", "l1", "l2", "l3"}, {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
  CHECK(center_rank(star) == 1);
}

TEST_CASE("isomorphism classes of small graphs") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(graphs_up_to_isomorphism(n).size() == expected[n - 1]);
}

TEST_CASE("pair classification matches the brute-force component check") {
  bool saw_subordinate = false, saw_shared = false;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& g : graphs_up_to_isomorphism(n))
      for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = 0; b < g.size(); ++b) {
          if (a == b || g.adjacent(a, b)) continue;
          REQUIRE(oracle::pair_classification_holds(g, a, b));
          const auto c = classify_pair(g, a, b);
          REQUIRE(c.dominating_a.contains(b));
          REQUIRE(c.dominating_b.contains(a));
          for (const auto& k : c.subordinate_a) REQUIRE((k.members & ~c.dominating_b.members) == 0);
          saw_subordinate = saw_subordinate || !c.subordinate_a.empty();
          saw_shared = saw_shared || !c.shared.empty();
          REQUIRE(is_sil_pair(g, a, b) == is_sil_pair_by_links(g, a, b));
        }
  CHECK(saw_subordinate);
  CHECK(saw_shared);
}

TEST_CASE("support graph edges and certificates on random graphs") {
  std::mt19937_64 rng(0x5eed11);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = oracle::random_graph(size(rng), 0.35, rng);
    for (VertexId a = 0; a < g.size(); ++a) {
      const auto d = support_graph(g, a);
      // Brute-force edge set straight from the definition.
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < d.nodes.size(); ++i)
        for (std::size_t j = 0; j < d.nodes.size(); ++j) {
          if (i == j) continue;
          bool joined = false;
          for (VertexId b : d.nodes[i].vertices()) {
            const auto cb = oracle::components(g, oracle::star_complement(g, b));
            if (std::find(cb.begin(), cb.end(), d.nodes[j].members) != cb.end()) joined = true;
          }
          if (joined) edges.emplace_back(std::min(i, j), std::max(i, j));
        }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      REQUIRE(d.edges == edges);

      std::vector<std::size_t> root(d.nodes.size());
      std::iota(root.begin(), root.end(), 0);
      auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
      };
      std::size_t parts = d.nodes.size();
      for (const auto& [i, j] : d.edges)
        if (find(i) != find(j)) {
          root[find(i)] = find(j);
          --parts;
        }
      const auto cert = forest_certificate(d);
      if (const auto* f = std::get_if<ForestData>(&cert)) {
        // A forest has #nodes - #trees edges.
        REQUIRE(d.edges.size() + f->trees.size() == d.nodes.size());
      } else {
        const auto& cyc = std::get<LoopWitness>(cert).cycle;
        REQUIRE(cyc.size() >= 3);
        for (std::size_t i = 0; i < cyc.size(); ++i) REQUIRE(d.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]));
        REQUIRE(d.edges.size() + parts > d.nodes.size());
      }
    }
  }
}
