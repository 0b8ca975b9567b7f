#include <catch_amalgamated.hpp>

#include <random>

#include "raagbns/corpus.hpp"
#include "raagbns/io.hpp"
#include "support/oracles.hpp"

using namespace raagbns;

namespace {

std::string data(const std::string& rel) { return std::string(RAAGBNS_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("graphs load from JSON and edge lists") {
  const auto f3 = load_graph(data("graphs/f3.json"));
  CHECK(f3.size() == 3);
  CHECK(f3.edges().empty());
  const auto k4 = load_graph(data("graphs/k4.json"));
  CHECK(k4.edges().size() == 6);
  const auto sq = load_graph(data("graphs/square_plus_point.txt"));
  CHECK(sq.size() == 5);
  CHECK(sq.edges().size() == 4);
  CHECK(link(sq, sq.index_of("e")) == 0);
  CHECK(load_graph(data("graphs/cycle5.txt")).edges().size() == 5);
}

TEST_CASE("malformed graphs are input errors") {
  CHECK_THROWS_AS(parse_graph("{\"vertices\": [\"a\",}"), InputError);
  CHECK_THROWS_AS(parse_graph("{\"edges\": []}"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a", 3]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a", "b"], "edges": [["a"]]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a", "b"], "edges": [["a", "c"]]})"), InputError);
  CHECK_THROWS_AS(parse_graph("a b c\n"), InputError);
  CHECK_THROWS_AS(parse_graph("a a\n"), InputError);
  CHECK_THROWS_AS(load_graph(data("graphs/missing.json")), InputError);
  CHECK(parse_graph("# only a comment\n\n").size() == 0);
}

TEST_CASE("graphs round-trip through both formats") {
  std::mt19937_64 rng(0x5eed61);
  std::uniform_int_distribution<std::size_t> size(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(size(rng), 0.4, rng);
    REQUIRE(graph_from_json(to_json(g)) == g);
    REQUIRE(parse_graph(to_edge_list(g)) == g);
    REQUIRE(parse_graph(to_json(g).dump()) == g);
  }
}

TEST_CASE("arrangements load with rational entries") {
  const auto a = load_arrangement(data("arrangements/example31.json"));
  CHECK(a.ambient_dim == 2);
  CHECK(a.subspaces.size() == 3);
  const auto b = arrangement_from_json(parse_json_text(R"({"ambient_dim": 2, "subspaces": [[["1/2", 1], [1, 3]]]})"));
  CHECK(b.subspaces[0] == Subspace::full(2));
  CHECK(arrangement_from_json(to_json(a)).subspaces == a.subspaces);
  CHECK(to_json(b)["subspaces"][0][0][0] == "1");
}

TEST_CASE("malformed arrangements are input errors") {
  CHECK_THROWS_AS(arrangement_from_json(parse_json_text(R"({"subspaces": []})")), InputError);
  CHECK_THROWS_AS(arrangement_from_json(parse_json_text(R"({"ambient_dim": -1, "subspaces": []})")), InputError);
  CHECK_THROWS_AS(arrangement_from_json(parse_json_text(R"({"ambient_dim": 2})")), InputError);
  CHECK_THROWS_AS(arrangement_from_json(parse_json_text(R"({"ambient_dim": 2, "subspaces": [[[1]]]})")), InputError);
  CHECK_THROWS_AS(arrangement_from_json(parse_json_text(R"({"ambient_dim": 2, "subspaces": [[[1, 1.5]]]})")),
                  InputError);
  CHECK_THROWS_AS(arrangement_from_json(parse_json_text(R"({"ambient_dim": 1, "subspaces": [[["1/0"]]]})")),
                  InputError);
  CHECK_THROWS_AS(arrangement_from_json(parse_json_text(R"({"ambient_dim": 1, "subspaces": [5]})")), InputError);
}

TEST_CASE("reports carry the shared envelope and are deterministic") {
  const auto g = load_graph(data("graphs/f3.json"));
  auto build = [&] {
    return run_report("classify", to_json(g), to_json(g, classify_pso(g))).dump(2);
  };
  const auto first = build();
  CHECK(first == build());
  const auto j = parse_json_text(first);
  CHECK(j["tool"] == "raagbns");
  CHECK(j["command"] == "classify");
  CHECK(j["deterministic"] == true);
  CHECK(j["result"].contains("verdict"));
  CHECK(to_json(betti_profile(load_arrangement(data("arrangements/example32.json"))))["betti"] ==
        Json::array({0, 0, 1}));
}
