#pragma once

// Presentations of PSA(A_Γ) and PSO(A_Γ) on the standard generators, and,
// when every support graph is a forest, the graph Θ with the maps
// φ: A_Θ → PSO(A_Γ) and ψ: PSO(A_Γ) → A_Θ on generators.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "raagbns/bns.hpp"
#include "raagbns/error.hpp"
#include "raagbns/generators.hpp"
#include "raagbns/graph.hpp"
#include "raagbns/homology.hpp"
#include "raagbns/raag_words.hpp"

namespace raagbns {

enum class RelatorFamily { adjacent_multipliers, disjoint_components, nested_components, separating_links, inner };

inline const char* to_string(RelatorFamily f) {
  switch (f) {
    case RelatorFamily::adjacent_multipliers: return "adjacent_multipliers";
    case RelatorFamily::disjoint_components: return "disjoint_components";
    case RelatorFamily::nested_components: return "nested_components";
    case RelatorFamily::separating_links: return "separating_links";
    case RelatorFamily::inner: return "inner";
  }
  return "?";
}

/// Generators are named symbols; relator letters index into `generators`.
struct GroupPresentation {
  std::string kind;  // "psa", "pso" or "raag"
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<RelatorFamily> families;  // parallel to relators
};

inline bool commutes_by_schema(const SimpleGraph& g, const StandardGenerator& x, const StandardGenerator& y,
                               RelatorFamily& family) {
  const VertexId a = x.multiplier;
  const VertexId b = y.multiplier;
  const VertexMask k = x.component.members;
  const VertexMask l = y.component.members;
  if (a == b || g.adjacent(a, b)) {
    family = RelatorFamily::adjacent_multipliers;
    return true;
  }
  if ((k & l) == 0 && !has(k, b) && !has(l, a)) {
    family = RelatorFamily::disjoint_components;
    return true;
  }
  const VertexMask ka = k | bit(a);
  const VertexMask lb = l | bit(b);
  if ((ka & ~l) == 0 || (lb & ~k) == 0) {
    family = RelatorFamily::nested_components;
    return true;
  }
  return false;
}

inline GroupPresentation psa_presentation(const SimpleGraph& g) {
  const CharacterBasis basis(g);
  GroupPresentation p;
  p.kind = "psa";
  for (const auto& s : basis.generators()) p.generators.push_back(generator_name(g, s));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      RelatorFamily family{};
      if (!commutes_by_schema(g, basis[i], basis[j], family)) continue;
      p.relators.push_back(commutator_word({Letter{i, 1}}, {Letter{j, 1}}));
      p.families.push_back(family);
    }
  // [π^a_K π^a_L, π^b_L] with b ∈ K and L a component for both a and b.
  std::vector<Word> sil;
  for (VertexId a = 0; a < g.size(); ++a)
    for (VertexId b = 0; b < g.size(); ++b) {
      if (a == b || g.adjacent(a, b)) continue;
      const auto [lo, hi] = basis.block(a);
      const auto [blo, bhi] = basis.block(b);
      for (std::size_t ki = lo; ki < hi; ++ki) {
        if (!basis[ki].component.contains(b)) continue;
        for (std::size_t li = lo; li < hi; ++li) {
          if (li == ki) continue;
          for (std::size_t lj = blo; lj < bhi; ++lj) {
            if (!(basis[lj].component == basis[li].component)) continue;
            Word w = commutator_word({Letter{ki, 1}, Letter{li, 1}}, {Letter{lj, 1}});
            if (std::find(sil.begin(), sil.end(), w) == sil.end()) sil.push_back(std::move(w));
          }
        }
      }
    }
  for (auto& w : sil) {
    p.relators.push_back(std::move(w));
    p.families.push_back(RelatorFamily::separating_links);
  }
  return p;
}

inline GroupPresentation pso_presentation(const SimpleGraph& g) {
  const CharacterBasis basis(g);
  GroupPresentation p = psa_presentation(g);
  p.kind = "pso";
  for (VertexId a = 0; a < g.size(); ++a) {
    const auto [lo, hi] = basis.block(a);
    if (lo == hi) continue;
    Word w;
    for (std::size_t i = lo; i < hi; ++i) w.push_back(Letter{i, 1});
    p.relators.push_back(std::move(w));
    p.families.push_back(RelatorFamily::inner);
  }
  return p;
}

/// A support graph with a loop, reported when Θ cannot be built.
class NotAForest : public Error {
 public:
  NotAForest(VertexId owner, LoopWitness loop)
      : Error("support graph has a loop"), owner_(owner), loop_(std::move(loop)) {}
  [[nodiscard]] VertexId owner() const { return owner_; }
  [[nodiscard]] const LoopWitness& loop() const { return loop_; }

 private:
  VertexId owner_;
  LoopWitness loop_;
};

/// Basepoint choice for one support graph: basepoint[t] is the basepoint
/// node of forest tree t; `preferred` indexes the tree of the preferred one.
struct BasepointChoice {
  std::vector<std::size_t> basepoint;
  std::size_t preferred = 0;
};

/// Requested basepoints per owner: each listed component becomes the
/// basepoint of its tree, and the first listed one is preferred.
using BasepointOverrides = std::map<VertexId, std::vector<Component>>;

struct ThetaVertex {
  enum class Kind { edge, tree };
  Kind kind = Kind::edge;
  VertexId owner = 0;
  std::size_t index = 0;  // edge index in Δ_owner, or tree index in its forest
  std::string label;
};

struct ThetaGraph {
  SimpleGraph graph;
  std::vector<ThetaVertex> vertices;  // indexed by graph vertex id
  std::vector<SupportGraph> support;  // Δ_a for every a
  std::vector<ForestData> forests;
  std::vector<BasepointChoice> basepoints;
  std::vector<std::vector<std::size_t>> tree_of_node;          // per a: node -> tree index
  std::vector<std::map<std::size_t, VertexId>> edge_vertex;    // per a: edge index -> Θ vertex
  std::vector<std::map<std::size_t, VertexId>> tree_vertex;    // per a: tree index -> Θ vertex

  [[nodiscard]] std::size_t tree_generator_count() const {
    std::size_t n = 0;
    for (const auto& v : vertices) n += v.kind == ThetaVertex::Kind::tree;
    return n;
  }
};

namespace detail {

inline BasepointChoice default_basepoints(const ForestData& forest) {
  BasepointChoice c;
  for (const auto& tree : forest.trees) c.basepoint.push_back(tree.front());
  c.preferred = 0;
  return c;
}

inline std::string edge_label(const SimpleGraph& g, const SupportGraph& d, std::size_t e) {
  const auto [i, j] = d.edges[e];
  return "e(" + g.label(d.owner) + ";" + component_name(g, d.nodes[i]) + "|" + component_name(g, d.nodes[j]) + ")";
}

inline std::string tree_label(const SimpleGraph& g, const SupportGraph& d, std::size_t basepoint) {
  return "z(" + g.label(d.owner) + ";" + component_name(g, d.nodes[basepoint]) + ")";
}

}  // namespace detail

/// Whether the Θ vertices for edge e of Δ_a and edge f of Δ_b are joined.
inline bool theta_edges_commute(const SimpleGraph& g, const SupportGraph& da, std::size_t e, const SupportGraph& db,
                                std::size_t f) {
  const VertexId a = da.owner;
  const VertexId b = db.owner;
  if (a == b || !is_sil_pair(g, a, b)) return true;
  const auto cls = classify_pair(g, a, b);
  const auto [e1, e2] = da.edges[e];
  const auto [f1, f2] = db.edges[f];
  for (const auto& l : cls.shared) {
    auto matches = [&](const SupportGraph& d, std::size_t x, std::size_t y, const Component& dom) {
      const Component& p = d.nodes[x];
      const Component& q = d.nodes[y];
      return (p == dom && q == l) || (p == l && q == dom);
    };
    if (matches(da, e1, e2, cls.dominating_a) && matches(db, f1, f2, cls.dominating_b)) return false;
  }
  return true;
}

inline ThetaGraph theta_graph(const SimpleGraph& g, const BasepointOverrides& overrides = {}) {
  ThetaGraph th;
  for (VertexId a = 0; a < g.size(); ++a) {
    th.support.push_back(support_graph(g, a));
    auto cert = forest_certificate(th.support.back());
    if (auto* loop = std::get_if<LoopWitness>(&cert)) throw NotAForest(a, *loop);
    th.forests.push_back(std::get<ForestData>(cert));
  }
  for (const auto& [owner, _] : overrides)
    if (owner >= g.size()) throw InputError("basepoint override for an unknown vertex");

  std::vector<ThetaVertex> pending;
  for (VertexId a = 0; a < g.size(); ++a) {
    const auto& d = th.support[a];
    const auto& forest = th.forests[a];
    std::vector<std::size_t> tree_of(d.nodes.size(), 0);
    for (std::size_t t = 0; t < forest.trees.size(); ++t)
      for (std::size_t node : forest.trees[t]) tree_of[node] = t;
    BasepointChoice choice = detail::default_basepoints(forest);
    if (auto it = overrides.find(a); it != overrides.end()) {
      std::vector<bool> seen(forest.trees.size(), false);
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        const std::size_t node = d.node_index(it->second[i]);
        const std::size_t t = tree_of[node];
        if (seen[t]) throw InputError("two basepoints requested in one tree of a support graph");
        seen[t] = true;
        choice.basepoint[t] = node;
        if (i == 0) choice.preferred = t;
      }
    }
    th.tree_of_node.push_back(tree_of);
    th.basepoints.push_back(choice);
    for (std::size_t e = 0; e < d.edges.size(); ++e)
      pending.push_back(ThetaVertex{ThetaVertex::Kind::edge, a, e, detail::edge_label(g, d, e)});
    for (std::size_t t = 0; t < forest.trees.size(); ++t)
      if (t != choice.preferred)
        pending.push_back(
            ThetaVertex{ThetaVertex::Kind::tree, a, t, detail::tree_label(g, d, choice.basepoint[t])});
  }
  if (pending.size() > kMaxVertices) throw CapExceeded("Θ would have more than 64 vertices");

  std::vector<std::string> labels;
  for (const auto& v : pending) labels.push_back(v.label);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < pending.size(); ++i)
    for (std::size_t j = i + 1; j < pending.size(); ++j) {
      const auto& x = pending[i];
      const auto& y = pending[j];
      bool joined = true;
      if (x.kind == ThetaVertex::Kind::edge && y.kind == ThetaVertex::Kind::edge)
        joined = theta_edges_commute(g, th.support[x.owner], x.index, th.support[y.owner], y.index);
      if (joined) edges.emplace_back(x.label, y.label);
    }
  th.graph = SimpleGraph(labels, edges);
  th.vertices.resize(pending.size());
  th.edge_vertex.resize(g.size());
  th.tree_vertex.resize(g.size());
  for (auto& v : pending) {
    const VertexId id = th.graph.index_of(v.label);
    (v.kind == ThetaVertex::Kind::edge ? th.edge_vertex : th.tree_vertex)[v.owner][v.index] = id;
    th.vertices[id] = std::move(v);
  }
  return th;
}

/// Integer matrix stored row-major as nested vectors.
using IntMatrix = std::vector<std::vector<long long>>;

struct GeneratorDictionary {
  std::vector<Word> phi;  // per Θ vertex, a word in standard generators
  std::vector<Word> psi;  // per standard generator, a word in Θ vertices
  IntMatrix phi_ab;       // N x |Θ|: column v is the exponent sum of φ(v)
  IntMatrix psi_ab;       // |Θ| x N
};

namespace detail {

// Nodes of the tree reachable from `start` without crossing edge (u, w).
inline std::vector<std::size_t> side_of_cut(const SupportGraph& d, std::size_t start, std::size_t u, std::size_t w) {
  const auto adj = d.adjacency();
  std::vector<bool> seen(d.nodes.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  std::vector<std::size_t> out;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    out.push_back(x);
    for (std::size_t y : adj[x]) {
      if (seen[y] || (x == u && y == w) || (x == w && y == u)) continue;
      seen[y] = true;
      queue.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The first edge on the tree path from `node` to `target`, as an edge index.
inline std::size_t edge_towards(const SupportGraph& d, std::size_t node, std::size_t target) {
  const auto adj = d.adjacency();
  std::vector<std::size_t> parent(d.nodes.size(), SIZE_MAX);
  std::deque<std::size_t> queue{target};
  parent[target] = target;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adj[x])
      if (parent[y] == SIZE_MAX) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (parent[node] == SIZE_MAX || node == target) throw InvariantViolation("node is not below the basepoint");
  return *d.edge_index(node, parent[node]);
}

inline IntMatrix abelianize(const std::vector<Word>& words, std::size_t rows) {
  IntMatrix m(rows, std::vector<long long>(words.size(), 0));
  for (std::size_t c = 0; c < words.size(); ++c)
    for (const auto& l : words[c]) m.at(l.vertex)[c] += l.exponent;
  return m;
}

}  // namespace detail

inline GeneratorDictionary generator_dictionary(const SimpleGraph& g, const ThetaGraph& th) {
  const CharacterBasis basis(g);
  GeneratorDictionary dict;
  for (const auto& v : th.vertices) {
    const auto& d = th.support[v.owner];
    const auto& choice = th.basepoints[v.owner];
    std::vector<std::size_t> nodes;
    if (v.kind == ThetaVertex::Kind::tree) {
      nodes = th.forests[v.owner].trees[v.index];
    } else {
      const auto [i, j] = d.edges[v.index];
      const std::size_t bp = choice.basepoint[th.tree_of_node[v.owner][i]];
      const auto near = detail::side_of_cut(d, bp, i, j);
      const std::size_t far = std::binary_search(near.begin(), near.end(), i) ? j : i;
      nodes = detail::side_of_cut(d, far, i, j);
    }
    Word w;
    for (std::size_t node : nodes) w.push_back(Letter{basis.index_of(v.owner, d.nodes[node]), 1});
    dict.phi.push_back(std::move(w));
  }

  for (const auto& s : basis.generators()) {
    const VertexId a = s.multiplier;
    const auto& d = th.support[a];
    const auto& choice = th.basepoints[a];
    const std::size_t node = d.node_index(s.component);
    const std::size_t tree = th.tree_of_node[a][node];
    const std::size_t bp = choice.basepoint[tree];
    std::vector<std::size_t> incident;
    for (std::size_t e = 0; e < d.edges.size(); ++e)
      if (d.edges[e].first == node || d.edges[e].second == node) incident.push_back(e);
    Word w;
    auto edge_letter = [&](std::size_t e, int exp) { return Letter{th.edge_vertex[a].at(e), exp}; };
    if (node != bp) {
      const std::size_t up = detail::edge_towards(d, node, bp);
      w.push_back(edge_letter(up, 1));
      for (std::size_t e : incident)
        if (e != up) w.push_back(edge_letter(e, -1));
    } else {
      if (tree != choice.preferred) {
        w.push_back(Letter{th.tree_vertex[a].at(tree), 1});
      } else {
        for (std::size_t t = 0; t < th.forests[a].trees.size(); ++t)
          if (t != choice.preferred) w.push_back(Letter{th.tree_vertex[a].at(t), -1});
      }
      for (std::size_t e : incident) w.push_back(edge_letter(e, -1));
    }
    dict.psi.push_back(std::move(w));
  }
  dict.phi_ab = detail::abelianize(dict.phi, basis.size());
  dict.psi_ab = detail::abelianize(dict.psi, th.vertices.size());
  return dict;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols) {
  IntMatrix out(a.size(), std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// Abelianized ψ∘φ is the identity on Z^{V(Θ)}.
inline bool psi_phi_identity_ab(const GeneratorDictionary& d) {
  const std::size_t t = d.phi.size();
  const std::size_t n = d.psi.size();
  const auto m = multiply(d.psi_ab, d.phi_ab, n, t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

/// Abelianized φ∘ψ is the identity on Z^N modulo the inner relations, i.e.
/// every column of φψ − I is constant on each multiplier block.
inline bool phi_psi_identity_ab(const SimpleGraph& g, const GeneratorDictionary& d) {
  const CharacterBasis basis(g);
  const std::size_t t = d.phi.size();
  const std::size_t n = d.psi.size();
  auto m = multiply(d.phi_ab, d.psi_ab, t, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] -= 1;
  for (std::size_t c = 0; c < n; ++c)
    for (VertexId a = 0; a < g.size(); ++a) {
      const auto [lo, hi] = basis.block(a);
      for (std::size_t r = lo; r < hi; ++r)
        if (m[r][c] != m[lo][c]) return false;
    }
  return true;
}

/// ψ applied letterwise to a word in standard generators.
inline Word psi_image(const GeneratorDictionary& d, const Word& w) {
  Word out;
  for (const auto& l : w) out = concat(std::move(out), l.exponent > 0 ? d.psi.at(l.vertex) : inverse(d.psi.at(l.vertex)));
  return out;
}

inline Word phi_image(const GeneratorDictionary& d, const Word& w) {
  Word out;
  for (const auto& l : w) out = concat(std::move(out), l.exponent > 0 ? d.phi.at(l.vertex) : inverse(d.phi.at(l.vertex)));
  return out;
}

/// Every relator of the PSO presentation maps to the identity of A_Θ.
inline bool verify_psi_kills_relators(const SimpleGraph& g, const ThetaGraph& th, const GeneratorDictionary& d) {
  for (const auto& r : pso_presentation(g).relators)
    if (!is_trivial(th.graph, psi_image(d, r))) return false;
  return true;
}

/// ψ(φ(v)) reduces to v in A_Θ for every Θ vertex.
inline bool psi_phi_roundtrip(const ThetaGraph& th, const GeneratorDictionary& d) {
  for (VertexId v = 0; v < th.vertices.size(); ++v)
    if (reduce(th.graph, psi_image(d, d.phi[v])) != Word{Letter{v, 1}}) return false;
  return true;
}

struct PsoVerdict {
  bool is_raag = false;
  // RAAG side.
  std::optional<ThetaGraph> theta;
  std::optional<GeneratorDictionary> dictionary;
  std::size_t theta_center_rank = 0;
  bool relators_verified = false;
  // Loop side.
  VertexId owner = 0;
  std::vector<Component> loop;
  std::optional<H1Witness> witness;
};

inline PsoVerdict classify_pso(const SimpleGraph& g, const EnumerationLimits& limits = {},
                               const BasepointOverrides& overrides = {}) {
  PsoVerdict v;
  try {
    ThetaGraph th = theta_graph(g, overrides);
    v.is_raag = true;
    v.dictionary = generator_dictionary(g, th);
    v.relators_verified = verify_psi_kills_relators(g, th, *v.dictionary);
    v.theta_center_rank = center_rank(th.graph);
    v.theta = std::move(th);
  } catch (const NotAForest& e) {
    v.is_raag = false;
    v.owner = e.owner();
    const auto d = support_graph(g, e.owner());
    for (std::size_t node : e.loop().cycle) v.loop.push_back(d.nodes[node]);
    const auto pso = pso_arrangement(g, limits);
    const auto complex = build_chain_complex(pso.arrangement);
    v.witness = h1_witness(g, pso, complex, v.owner, v.loop);
  }
  return v;
}

}  // namespace raagbns
