#pragma once

// Per-graph consistency checks tying the modules together. Each returns a
// named pass/fail with a short detail string; the corpus runner and the
// acceptance suite both use them.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "raagbns/bns.hpp"
#include "raagbns/graph.hpp"
#include "raagbns/homology.hpp"
#include "raagbns/presentations.hpp"
#include "raagbns/raag_words.hpp"

namespace raagbns {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::string profile_string(const BettiProfile& b) {
  std::string s = "(";
  for (std::size_t k = 0; k < b.betti.size(); ++k) s += (k ? "," : "") + std::to_string(b.betti[k]);
  return s + ") euler " + std::to_string(b.euler);
}

inline bool has_sil_pair(const SimpleGraph& g) {
  for (VertexId a = 0; a < g.size(); ++a)
    for (VertexId b = a + 1; b < g.size(); ++b)
      if (is_sil_pair(g, a, b)) return true;
  return false;
}

/// dim H_0 of the A_Γ arrangement equals the number of central vertices and
/// the higher homology vanishes.
inline CheckResult check_raag_center(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  const Arrangement a = raag_arrangement(g, limits);
  const BettiProfile b = betti_profile(a);
  const std::size_t center = center_rank(g);
  const bool ok = b[0] == center && b.higher_vanish() && h0_dim(a) == center;
  return {"raag_center", ok, profile_string(b) + ", center rank " + std::to_string(center)};
}

/// PSA Euler characteristic is zero without SIL-pairs and negative with one.
inline CheckResult check_psa_euler(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  const BettiProfile b = betti_profile(psa_arrangement(g, limits));
  const bool sil = has_sil_pair(g);
  const bool ok = sil ? b.euler < 0 : b.euler == 0;
  return {"psa_euler", ok, profile_string(b) + (sil ? ", has SIL-pair" : ", no SIL-pair")};
}

/// The forest/loop dichotomy for PSO: either Θ with all of its verifications
/// and a matching Betti profile, or a loop with a nonzero H_1 class.
inline CheckResult check_pso_dichotomy(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  const PsoVerdict v = classify_pso(g, limits);
  const BettiProfile b = betti_profile(pso_arrangement(g, limits).arrangement);
  if (v.is_raag) {
    const auto& th = *v.theta;
    const auto& d = *v.dictionary;
    std::size_t expected_b0 = 0;
    for (const auto& f : th.forests) expected_b0 += f.trees.empty() ? 0 : f.trees.size() - 1;
    const std::size_t trees = th.tree_generator_count();
    const bool ok = v.relators_verified && psi_phi_identity_ab(d) && phi_psi_identity_ab(g, d) &&
                    psi_phi_roundtrip(th, d) && b.higher_vanish() && b[0] == trees && trees == v.theta_center_rank &&
                    trees == expected_b0;
    return {"pso_forest", ok,
            "raag, |Θ| = " + std::to_string(th.vertices.size()) + ", tree generators " + std::to_string(trees) +
                ", center rank " + std::to_string(v.theta_center_rank) + ", " + profile_string(b)};
  }
  const auto& w = *v.witness;
  const bool ok = b[1] >= 1 && w.pairing_value == 1 && w.boundary_zero;
  return {"pso_loop", ok,
          "not_raag, loop length " + std::to_string(v.loop.size()) + ", pairing " + format_rational(w.pairing_value) +
              ", " + profile_string(b)};
}

/// Word-level Aut triviality of [π^a_K, π^b_L] agrees with the
/// classification for every pair of generators with distinct multipliers;
/// Out-trivial but Aut-nontrivial commutators have a short conjugator.
inline CheckResult check_commutation(const SimpleGraph& g, std::size_t conjugator_bound = 4) {
  const CharacterBasis basis(g);
  std::size_t pairs = 0, inner_cases = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& x = basis[i];
      const auto& y = basis[j];
      if (x.multiplier == y.multiplier) continue;
      ++pairs;
      const auto table = commutator_table(g, x.multiplier, x.component.members, y.multiplier, y.component.members);
      const bool aut_trivial = is_identity(g, table);
      const auto kase = commutation_case(g, x.multiplier, x.component, y.multiplier, y.component);
      if (aut_trivial != (kase == CommutationCase::commuting))
        return {"commutation", false,
                "mismatch for " + generator_name(g, x) + ", " + generator_name(g, y) + ": " + to_string(kase)};
      if (!aut_trivial && commutator_class_out(g, x.multiplier, x.component, y.multiplier, y.component) ==
                              OutClass::trivial) {
        ++inner_cases;
        if (!is_inner_bounded(g, table, conjugator_bound))
          return {"commutation", false,
                  "no conjugator for " + generator_name(g, x) + ", " + generator_name(g, y)};
      }
    }
  return {"commutation", true,
          std::to_string(pairs) + " ordered pairs, " + std::to_string(inner_cases) + " inner commutators"};
}

/// Each ζ^a_C commutes in Aut with every standard generator, either
/// directly or after trading ζ^a_C for the inverse product over the other
/// trees of Δ_a (the two differ by the inner automorphism of a).
inline CheckResult check_zeta_central(const SimpleGraph& g) {
  const CharacterBasis basis(g);
  std::size_t checked = 0;
  for (VertexId a = 0; a < g.size(); ++a) {
    const auto d = support_graph(g, a);
    // Components of Δ_a, forest or not.
    std::vector<std::vector<std::size_t>> parts;
    {
      const auto adj = d.adjacency();
      std::vector<bool> seen(d.nodes.size(), false);
      for (std::size_t s = 0; s < d.nodes.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> part{s}, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
          const std::size_t u = stack.back();
          stack.pop_back();
          for (std::size_t w : adj[u])
            if (!seen[w]) {
              seen[w] = true;
              part.push_back(w);
              stack.push_back(w);
            }
        }
        parts.push_back(part);
      }
    }
    for (const auto& part : parts) {
      VertexMask inside = 0, outside = 0;
      for (std::size_t n = 0; n < d.nodes.size(); ++n)
        (std::find(part.begin(), part.end(), n) != part.end() ? inside : outside) |= d.nodes[n].members;
      for (const auto& y : basis.generators()) {
        ++checked;
        auto commutes = [&](VertexMask support) {
          if (support == 0) return true;
          return is_identity(g, product_table(g, {{a, support, 1},
                                                  {y.multiplier, y.component.members, 1},
                                                  {a, support, -1},
                                                  {y.multiplier, y.component.members, -1}}));
        };
        if (!commutes(inside) && !commutes(outside))
          return {"zeta_central", false, "ζ for " + g.label(a) + " fails against " + generator_name(g, y)};
      }
    }
  }
  return {"zeta_central", true, std::to_string(checked) + " tree/generator pairs"};
}

/// For a forest case: joined Θ edge-vertices have some choice of sides
/// whose products commute in Aut, unjoined ones have none; and each τ^a_e
/// together with its complementary side multiplies to ζ^a_C.
inline CheckResult check_theta_commutation(const SimpleGraph& g, const ThetaGraph& th, const GeneratorDictionary& d) {
  const CharacterBasis basis(g);
  auto support_of = [&](const Word& w) {
    VertexMask m = 0;
    for (const auto& l : w) m |= basis[l.vertex].component.members;
    return m;
  };
  std::vector<VertexMask> side, other;
  for (VertexId v = 0; v < th.vertices.size(); ++v) {
    const auto& meta = th.vertices[v];
    const VertexMask s = support_of(d.phi[v]);
    side.push_back(s);
    VertexMask tree = 0;
    const auto& nodes = th.support[meta.owner].nodes;
    const std::size_t t = meta.kind == ThetaVertex::Kind::tree
                              ? meta.index
                              : th.tree_of_node[meta.owner][th.support[meta.owner].edges[meta.index].first];
    for (std::size_t n : th.forests[meta.owner].trees[t]) tree |= nodes[n].members;
    if ((s & ~tree) != 0 || (meta.kind == ThetaVertex::Kind::tree && s != tree))
      return {"theta_commutation", false, "φ image of " + meta.label + " leaves its tree"};
    other.push_back(tree & ~s);
  }
  std::size_t pairs = 0;
  for (VertexId u = 0; u < th.vertices.size(); ++u)
    for (VertexId v = u + 1; v < th.vertices.size(); ++v) {
      const auto& x = th.vertices[u];
      const auto& y = th.vertices[v];
      if (x.kind != ThetaVertex::Kind::edge || y.kind != ThetaVertex::Kind::edge) continue;
      ++pairs;
      bool some = false;
      for (VertexMask p : {side[u], other[u]})
        for (VertexMask q : {side[v], other[v]}) {
          if (p == 0 || q == 0) {
            some = true;
            continue;
          }
          if (is_identity(g, product_table(g, {{x.owner, p, 1}, {y.owner, q, 1}, {x.owner, p, -1}, {y.owner, q, -1}})))
            some = true;
        }
      if (some != th.graph.adjacent(u, v))
        return {"theta_commutation", false, "Θ adjacency disagrees for " + x.label + ", " + y.label};
    }
  return {"theta_commutation", true, std::to_string(pairs) + " edge-generator pairs"};
}

inline std::vector<CheckResult> run_graph_checks(const SimpleGraph& g, const EnumerationLimits& limits = {}) {
  std::vector<CheckResult> out;
  out.push_back(check_raag_center(g, limits));
  out.push_back(check_psa_euler(g, limits));
  out.push_back(check_pso_dichotomy(g, limits));
  if (g.size() <= 6) out.push_back(check_commutation(g));
  out.push_back(check_zeta_central(g));
  const PsoVerdict v = classify_pso(g, limits);
  if (v.is_raag) out.push_back(check_theta_commutation(g, *v.theta, *v.dictionary));
  return out;
}

}  // namespace raagbns
