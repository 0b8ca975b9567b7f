#pragma once

// Excluded subspace arrangements of character spaces: maximal disconnected
// vertex sets for A_Γ, maximal p-sets and δ-p-sets for PSA(A_Γ), and the
// δ-p-set arrangement inside the inner-trivial characters for PSO(A_Γ).

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raagbns/error.hpp"
#include "raagbns/generators.hpp"
#include "raagbns/graph.hpp"
#include "raagbns/homology.hpp"
#include "raagbns/linalg.hpp"

namespace raagbns {

struct EnumerationLimits {
  std::size_t max_nodes = 1'000'000;
};

/// Default limits, with RAAGBNS_CAP overriding the node budget.
inline EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  if (const char* cap = std::getenv("RAAGBNS_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || value == 0) throw InputError("RAAGBNS_CAP must be a positive integer");
    limits.max_nodes = static_cast<std::size_t>(value);
  }
  return limits;
}

enum class SetKind { p, delta };

/// A generator set with a witnessing partition. Members and both sides are
/// sorted lists of indices into the CharacterBasis.
struct GeneratorSet {
  std::vector<std::size_t> members;
  std::vector<std::size_t> side1;
  std::vector<std::size_t> side2;

  friend bool operator==(const GeneratorSet& x, const GeneratorSet& y) { return x.members == y.members; }
  friend bool operator<(const GeneratorSet& x, const GeneratorSet& y) { return x.members < y.members; }
};

using PSet = GeneratorSet;
using DeltaPSet = GeneratorSet;

/// The cross-pair condition for π^a_K on one side and π^b_L on the other.
inline bool cross_condition(SetKind kind, const StandardGenerator& x, const StandardGenerator& y) {
  const bool a_in_l = y.component.contains(x.multiplier);
  const bool b_in_k = x.component.contains(y.multiplier);
  if (kind == SetKind::p) return a_in_l && b_in_k;
  return a_in_l || b_in_k || x.component == y.component;
}

inline bool multiplier_counts_ok(SetKind kind, const CharacterBasis& basis, const std::vector<std::size_t>& members) {
  std::map<VertexId, std::size_t> counts;
  for (std::size_t i : members) ++counts[basis[i].multiplier];
  for (const auto& [a, c] : counts)
    if (kind == SetKind::p ? c > 1 : c != 2) return false;
  return true;
}

/// A partition witness, if one exists: members are joined when their cross
/// condition fails, and any split along the resulting components works. The
/// first side is the component of the smallest member.
inline std::optional<GeneratorSet> partition_witness(SetKind kind, const CharacterBasis& basis,
                                                     std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) return std::nullopt;
  if (members.size() < 2 || !multiplier_counts_ok(kind, basis, members)) return std::nullopt;
  const std::size_t n = members.size();
  std::vector<bool> in_first(n, false);
  std::vector<std::size_t> stack{0};
  in_first[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (in_first[w]) continue;
      if (!cross_condition(kind, basis[members[u]], basis[members[w]])) {
        in_first[w] = true;
        stack.push_back(w);
      }
    }
  }
  GeneratorSet out;
  out.members = members;
  for (std::size_t i = 0; i < n; ++i) (in_first[i] ? out.side1 : out.side2).push_back(members[i]);
  if (out.side2.empty()) return std::nullopt;
  return out;
}

inline std::optional<PSet> is_pset(const CharacterBasis& basis, std::vector<std::size_t> members) {
  return partition_witness(SetKind::p, basis, std::move(members));
}

inline std::optional<DeltaPSet> is_delta_pset(const CharacterBasis& basis, std::vector<std::size_t> members) {
  return partition_witness(SetKind::delta, basis, std::move(members));
}

/// Direct check of a claimed witness against the definition.
inline bool witness_valid(SetKind kind, const CharacterBasis& basis, const GeneratorSet& s) {
  if (s.side1.empty() || s.side2.empty()) return false;
  std::vector<std::size_t> both = s.side1;
  both.insert(both.end(), s.side2.begin(), s.side2.end());
  std::sort(both.begin(), both.end());
  if (both != s.members || std::adjacent_find(both.begin(), both.end()) != both.end()) return false;
  if (!multiplier_counts_ok(kind, basis, s.members)) return false;
  for (std::size_t x : s.side1)
    for (std::size_t y : s.side2)
      if (!cross_condition(kind, basis[x], basis[y])) return false;
  return true;
}

namespace detail {

// Per-multiplier choice blocks: for p-sets a single generator, for
// δ-p-sets an unordered pair of generators with the same multiplier.
inline std::vector<std::vector<std::vector<std::size_t>>> choice_blocks(SetKind kind, const CharacterBasis& basis,
                                                                        std::size_t vertex_count) {
  std::vector<std::vector<std::vector<std::size_t>>> blocks(vertex_count);
  for (VertexId a = 0; a < vertex_count; ++a) {
    const auto [lo, hi] = basis.block(a);
    for (std::size_t i = lo; i < hi; ++i) {
      if (kind == SetKind::p) {
        blocks[a].push_back({i});
      } else {
        for (std::size_t j = i + 1; j < hi; ++j) blocks[a].push_back({i, j});
      }
    }
  }
  return blocks;
}

}  // namespace detail

/// All inclusion-maximal p-sets or δ-p-sets, sorted by member list.
///
/// Candidates are built one multiplier at a time (no choice, or one block).
/// A valid candidate is maximal as soon as no single additional block keeps
/// it valid: any valid proper superset restricts to a valid one-block
/// extension, since the other side of its partition stays nonempty.
inline std::vector<GeneratorSet> maximal_sets(SetKind kind, const SimpleGraph& g, const CharacterBasis& basis,
                                              const EnumerationLimits& limits) {
  const auto blocks = detail::choice_blocks(kind, basis, g.size());
  std::vector<GeneratorSet> out;
  std::vector<std::size_t> current;
  std::vector<std::size_t> chosen(g.size(), SIZE_MAX);
  std::size_t nodes = 0;

  auto is_maximal = [&](const std::vector<std::size_t>& members) {
    for (VertexId a = 0; a < g.size(); ++a) {
      if (chosen[a] != SIZE_MAX) continue;
      for (const auto& block : blocks[a]) {
        auto extended = members;
        extended.insert(extended.end(), block.begin(), block.end());
        if (partition_witness(kind, basis, std::move(extended))) return false;
      }
    }
    return true;
  };

  auto visit = [&](auto&& self, VertexId a) -> void {
    if (++nodes > limits.max_nodes)
      throw CapExceeded("generator-set enumeration exceeded " + std::to_string(limits.max_nodes) + " nodes");
    if (a == g.size()) {
      auto witness = partition_witness(kind, basis, current);
      if (witness && is_maximal(current)) out.push_back(std::move(*witness));
      return;
    }
    self(self, a + 1);
    for (std::size_t c = 0; c < blocks[a].size(); ++c) {
      chosen[a] = c;
      current.insert(current.end(), blocks[a][c].begin(), blocks[a][c].end());
      self(self, a + 1);
      current.resize(current.size() - blocks[a][c].size());
      chosen[a] = SIZE_MAX;
    }
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<PSet> maximal_psets(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  return maximal_sets(SetKind::p, g, CharacterBasis(g), limits);
}

inline std::vector<DeltaPSet> maximal_delta_psets(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  return maximal_sets(SetKind::delta, g, CharacterBasis(g), limits);
}

/// Coordinate subspace spanned by the χ^a_K of a p-set.
inline Subspace pset_subspace(std::size_t n, const GeneratorSet& s) { return Subspace::coordinate(n, s.members); }

/// Span of χ^a_K − χ^a_L over the same-multiplier pairs of a δ-p-set.
inline Subspace delta_pset_subspace(std::size_t n, const CharacterBasis& basis, const GeneratorSet& s) {
  QMatrix rows(0, n);
  std::vector<Rational> row(n);
  for (std::size_t i = 0; i < s.members.size(); ++i)
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      if (basis[s.members[i]].multiplier != basis[s.members[j]].multiplier) continue;
      std::fill(row.begin(), row.end(), Rational(0));
      row[s.members[i]] = 1;
      row[s.members[j]] = -1;
      rows.append_row(row);
    }
  return Subspace::span(n, std::move(rows));
}

/// Whether the full subgraph on s is disconnected (two or more components).
inline bool is_disconnected_set(const SimpleGraph& g, VertexMask s) { return components_within(g, s).size() >= 2; }

/// Maximal vertex sets inducing a disconnected full subgraph, in
/// lexicographic order. Maximality is tested by one-vertex extensions.
inline std::vector<VertexMask> maximal_disconnected_sets(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  if (g.size() >= 63 || (VertexMask{1} << g.size()) > limits.max_nodes)
    throw CapExceeded("vertex-subset enumeration exceeds " + std::to_string(limits.max_nodes) + " nodes");
  std::vector<VertexMask> out;
  for (VertexMask s = 0; s <= g.all(); ++s) {
    if (!is_disconnected_set(g, s)) continue;
    bool maximal = true;
    for (VertexId v = 0; v < g.size() && maximal; ++v)
      if (!has(s, v) && is_disconnected_set(g, s | bit(v))) maximal = false;
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

inline Arrangement raag_arrangement(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  Arrangement a{g.size(), {}};
  for (VertexMask s : maximal_disconnected_sets(g, limits)) {
    const auto axes = members_of(s);
    a.subspaces.push_back(Subspace::coordinate(g.size(), axes));
  }
  return a;
}

struct PsaArrangement {
  CharacterBasis basis;
  std::vector<PSet> psets;
  std::vector<DeltaPSet> delta_psets;
  Arrangement raw;       // p-set subspaces, then δ-p-set subspaces
  Arrangement filtered;  // maximal_filter(raw), used for homology
};

inline PsaArrangement psa_arrangement_data(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  PsaArrangement out;
  out.basis = CharacterBasis(g);
  const std::size_t n = out.basis.size();
  out.psets = maximal_sets(SetKind::p, g, out.basis, limits);
  out.delta_psets = maximal_sets(SetKind::delta, g, out.basis, limits);
  out.raw.ambient_dim = n;
  for (const auto& s : out.psets) out.raw.subspaces.push_back(pset_subspace(n, s));
  for (const auto& s : out.delta_psets) out.raw.subspaces.push_back(delta_pset_subspace(n, out.basis, s));
  out.filtered = maximal_filter(out.raw);
  return out;
}

inline Arrangement psa_arrangement(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  return psa_arrangement_data(g, limits).filtered;
}

/// Characters trivial on inner automorphisms: for each vertex a with
/// Γ−st(a) nonempty, the χ^a_K coordinates sum to zero.
inline Subspace pso_hom_space(const SimpleGraph& g, const CharacterBasis& basis) {
  const std::size_t n = basis.size();
  QMatrix relations(0, n);
  std::vector<Rational> row(n);
  for (VertexId a = 0; a < g.size(); ++a) {
    const auto [lo, hi] = basis.block(a);
    if (lo == hi) continue;
    std::fill(row.begin(), row.end(), Rational(0));
    for (std::size_t i = lo; i < hi; ++i) row[i] = 1;
    relations.append_row(row);
  }
  return kernel_basis(relations);
}

inline Subspace pso_hom_space(const SimpleGraph& g) { return pso_hom_space(g, CharacterBasis(g)); }

/// Coordinates of a subspace of W with respect to W's RREF basis.
inline Subspace to_w_coordinates(const Subspace& w, const Subspace& v) {
  QMatrix rows(0, w.dim());
  for (std::size_t r = 0; r < v.dim(); ++r) {
    if (!w.contains(v.basis().row(r))) throw InvariantViolation("subspace is not inside the inner-trivial characters");
    rows.append_row(w.coordinates(v.basis().row(r)));
  }
  return Subspace::span(w.dim(), std::move(rows));
}

struct PsoArrangement {
  CharacterBasis basis;
  Subspace hom_space;                   // W ⊆ Q^N
  std::vector<DeltaPSet> delta_psets;   // one subspace per set, same order
  Arrangement ambient;                  // subspaces in Q^N
  Arrangement arrangement;              // the same subspaces in W-coordinates
};

inline PsoArrangement pso_arrangement(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  PsoArrangement out;
  out.basis = CharacterBasis(g);
  const std::size_t n = out.basis.size();
  out.hom_space = pso_hom_space(g, out.basis);
  out.delta_psets = maximal_sets(SetKind::delta, g, out.basis, limits);
  out.ambient.ambient_dim = n;
  out.arrangement.ambient_dim = out.hom_space.dim();
  for (const auto& s : out.delta_psets) {
    Subspace v = delta_pset_subspace(n, out.basis, s);
    out.arrangement.subspaces.push_back(to_w_coordinates(out.hom_space, v));
    out.ambient.subspaces.push_back(std::move(v));
  }
  return out;
}

/// A nonzero class in H_1 of the PSO arrangement built from a loop in Δ_a:
/// the chain x with components χ^a_{K_i} − χ^a_{K_{i+1}} on the chosen
/// maximal δ-p-sets, paired against the cocycle that reads the K_1
/// coordinate on every set whose multiplier-a pair is {K_1, K_2}.
struct H1Witness {
  VertexId owner = 0;
  std::vector<Component> loop;
  std::vector<std::size_t> chosen_sets;            // arrangement index of S_i for each loop step
  std::vector<std::vector<Rational>> components;   // ambient χ-coordinates of each x_i
  std::vector<Rational> cycle_chain;               // x in the C_1 coordinates of the PSO complex
  std::vector<std::size_t> cocycle_support;        // T, as arrangement indices
  Rational pairing_value;
  bool boundary_zero = false;
};

inline H1Witness h1_witness(const SimpleGraph& g, const PsoArrangement& pso, const ChainComplexData& complex,
                            VertexId a, const std::vector<Component>& loop) {
  if (loop.size() < 3) throw InputError("a loop needs at least three distinct nodes");
  const CharacterBasis& basis = pso.basis;
  const std::size_t n = basis.size();
  std::vector<std::size_t> coords;
  for (const auto& k : loop) coords.push_back(basis.index_of(a, k));
  {
    auto sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("loop nodes repeat");
  }
  const auto delta_graph = support_graph(g, a);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto u = delta_graph.node_index(loop[i]);
    const auto w = delta_graph.node_index(loop[(i + 1) % loop.size()]);
    if (!delta_graph.edge_index(u, w)) throw InputError("loop uses a non-edge of the support graph");
  }

  auto a_pair = [&](const GeneratorSet& s) {
    std::vector<std::size_t> pair;
    for (std::size_t m : s.members)
      if (basis[m].multiplier == a) pair.push_back(m);
    return pair;
  };
  auto pair_of = [](std::size_t x, std::size_t y) { return std::vector<std::size_t>{std::min(x, y), std::max(x, y)}; };

  H1Witness w;
  w.owner = a;
  w.loop = loop;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto want = pair_of(coords[i], coords[(i + 1) % loop.size()]);
    std::optional<std::size_t> found;
    for (std::size_t s = 0; s < pso.delta_psets.size() && !found; ++s)
      if (a_pair(pso.delta_psets[s]) == want) found = s;
    if (!found) throw InvariantViolation("no maximal delta-p-set contains a consecutive loop pair");
    w.chosen_sets.push_back(*found);
    std::vector<Rational> x(n);
    x[coords[i]] = 1;
    x[coords[(i + 1) % loop.size()]] = -1;
    w.components.push_back(std::move(x));
  }

  const auto first_pair = pair_of(coords[0], coords[1]);
  for (std::size_t s = 0; s < pso.delta_psets.size(); ++s)
    if (a_pair(pso.delta_psets[s]) == first_pair) w.cocycle_support.push_back(s);

  // The functionals agree on overlaps: on V_i ∩ V_j with i ∈ T, j ∉ T the
  // K_1 coordinate must vanish.
  for (std::size_t i : w.cocycle_support) {
    for (std::size_t j = 0; j < pso.delta_psets.size(); ++j) {
      if (std::binary_search(w.cocycle_support.begin(), w.cocycle_support.end(), j)) continue;
      const Subspace meet = intersect_pair(pso.ambient.subspaces[i], pso.ambient.subspaces[j]);
      for (std::size_t r = 0; r < meet.dim(); ++r)
        if (sgn(meet.basis()(r, coords[0])) != 0) throw InvariantViolation("cocycle does not patch on an intersection");
    }
  }

  // Place x into C_1 of the complex on W-coordinates.
  if (complex.dims.size() < 2) throw InvariantViolation("PSO complex has no degree-one chains");
  w.cycle_chain.assign(complex.dims[1], Rational(0));
  std::vector<const ChainSummand*> summand_of(pso.delta_psets.size(), nullptr);
  for (const auto& s : complex.index_sets[1]) summand_of[s.indices.front()] = &s;
  w.pairing_value = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const std::size_t idx = w.chosen_sets[i];
    if (!pso.ambient.subspaces[idx].contains(w.components[i]))
      throw InvariantViolation("loop step is not inside its chosen subspace");
    const ChainSummand* summand = summand_of.at(idx);
    if (!summand) throw InvariantViolation("chosen subspace missing from the complex");
    const auto in_w = pso.hom_space.coordinates(w.components[i]);
    const auto local = summand->space.coordinates(in_w);
    for (std::size_t t = 0; t < local.size(); ++t) w.cycle_chain[summand->offset + t] += local[t];
    if (std::binary_search(w.cocycle_support.begin(), w.cocycle_support.end(), idx))
      w.pairing_value += w.components[i][coords[0]];
  }
  const auto image = complex.boundaries[1].apply(w.cycle_chain);
  w.boundary_zero = std::all_of(image.begin(), image.end(), [](const Rational& x) { return sgn(x) == 0; });
  return w;
}

struct EulerReport {
  BettiProfile raag;
  BettiProfile psa;
  BettiProfile pso;
};

inline EulerReport euler_report(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  EulerReport r;
  r.raag = betti_profile(raag_arrangement(g, limits));
  r.psa = betti_profile(psa_arrangement(g, limits));
  r.pso = betti_profile(pso_arrangement(g, limits).arrangement);
  return r;
}

}  // namespace raagbns
