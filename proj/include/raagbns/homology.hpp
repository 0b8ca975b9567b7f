#pragma once

// Homology of a finite subspace arrangement. C_0 is the ambient space and
// C_k is the direct sum of the k-fold intersections V_J over index sets
// j_1 < ... < j_k; the boundary deletes one index at a time with sign
// (-1)^(i-1), and ∂_1 adds the summands together inside the ambient space.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "raagbns/error.hpp"
#include "raagbns/linalg.hpp"

namespace raagbns {

/// Ambient dimension plus an indexed list of subspaces (repeats allowed;
/// repeated entries are distinct indexed elements).
struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Subspace> subspaces;

  void validate() const {
    for (const auto& s : subspaces)
      if (s.ambient_dim() != ambient_dim) throw InputError("arrangement subspace has the wrong ambient dimension");
  }
};

struct ChainSummand {
  std::vector<std::size_t> indices;  // J, strictly increasing
  Subspace space;                    // V_J
  std::size_t offset = 0;            // first coordinate of V_J inside C_k
};

struct ChainComplexData {
  std::vector<std::size_t> dims;                       // dims[k] = dim C_k
  std::vector<SparseMatrix> boundaries;                // boundaries[k] : C_k -> C_{k-1}; boundaries[0] is 0 x dims[0]
  std::vector<std::vector<ChainSummand>> index_sets;   // index_sets[k], k >= 1; index_sets[0] is empty

  [[nodiscard]] std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
};

struct BettiProfile {
  std::vector<std::size_t> betti;
  long long euler = 0;

  [[nodiscard]] std::size_t operator[](std::size_t k) const { return k < betti.size() ? betti[k] : 0; }
  [[nodiscard]] bool higher_vanish() const {
    for (std::size_t k = 1; k < betti.size(); ++k)
      if (betti[k] != 0) return false;
    return true;
  }
  friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

inline constexpr std::size_t kDefaultMaxSummands = 200'000;

namespace detail {

// V ∩ W where W is given by its constraint rows.
inline Subspace intersect_with_constraints(const Subspace& v, const QMatrix& constraints) {
  if (v.is_zero() || constraints.rows() == 0) return v;
  const QMatrix system = constraints * v.basis().transposed();
  const Subspace coeffs = kernel_basis(system);
  if (coeffs.is_zero()) return Subspace(v.ambient_dim());
  return Subspace::span(v.ambient_dim(), coeffs.basis() * v.basis());
}

}  // namespace detail

inline ChainComplexData build_chain_complex(const Arrangement& a, std::size_t max_summands = kDefaultMaxSummands) {
  a.validate();
  const std::size_t n = a.ambient_dim;
  ChainComplexData cc;
  cc.dims.push_back(n);
  cc.boundaries.emplace_back(0, n);
  cc.index_sets.emplace_back();

  std::vector<QMatrix> constraints;
  constraints.reserve(a.subspaces.size());
  for (const auto& s : a.subspaces) constraints.push_back(s.annihilator());

  std::vector<ChainSummand> level;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < a.subspaces.size(); ++j) {
    if (a.subspaces[j].is_zero()) continue;
    level.push_back(ChainSummand{{j}, a.subspaces[j], offset});
    offset += a.subspaces[j].dim();
  }

  std::size_t total = level.size();
  while (!level.empty()) {
    const std::size_t k = cc.dims.size();
    std::size_t dim_k = 0;
    for (const auto& s : level) dim_k += s.space.dim();
    const std::size_t rows = cc.dims.back();
    SparseMatrix boundary(rows, dim_k);

    std::map<std::vector<std::size_t>, const ChainSummand*> faces;
    if (k >= 2)
      for (const auto& s : cc.index_sets[k - 1]) faces.emplace(s.indices, &s);

    for (const auto& summand : level) {
      const QMatrix& basis = summand.space.basis();
      for (std::size_t t = 0; t < basis.rows(); ++t) {
        const std::size_t col = summand.offset + t;
        const auto v = basis.row(t);
        if (k == 1) {
          for (std::size_t r = 0; r < n; ++r) boundary.add(r, col, v[r]);
          continue;
        }
        for (std::size_t i = 0; i < k; ++i) {
          std::vector<std::size_t> face = summand.indices;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          const ChainSummand* target = faces.at(face);
          const bool negative = (i % 2) == 1;
          const auto& pivots = target->space.pivots();
          for (std::size_t s = 0; s < pivots.size(); ++s) {
            const Rational& x = v[pivots[s]];
            if (sgn(x) == 0) continue;
            boundary.add(target->offset + s, col, negative ? Rational(-x) : x);
          }
        }
      }
    }
    cc.dims.push_back(dim_k);
    cc.boundaries.push_back(std::move(boundary));

    std::vector<ChainSummand> next;
    std::size_t next_offset = 0;
    for (const auto& summand : level) {
      for (std::size_t j = summand.indices.back() + 1; j < a.subspaces.size(); ++j) {
        Subspace meet = detail::intersect_with_constraints(summand.space, constraints[j]);
        if (meet.is_zero()) continue;
        auto indices = summand.indices;
        indices.push_back(j);
        const std::size_t d = meet.dim();
        next.push_back(ChainSummand{std::move(indices), std::move(meet), next_offset});
        next_offset += d;
        if (++total > max_summands)
          throw CapExceeded("chain complex exceeds " + std::to_string(max_summands) + " summands");
      }
    }
    cc.index_sets.push_back(std::move(level));
    level = std::move(next);
  }
  return cc;
}

inline bool verify_complex(const ChainComplexData& c) {
  if (c.dims.size() != c.boundaries.size() || c.dims.empty()) return c.dims.empty() && c.boundaries.empty();
  for (std::size_t k = 0; k < c.boundaries.size(); ++k) {
    const auto& d = c.boundaries[k];
    if (d.cols() != c.dims[k]) return false;
    if (k == 0 ? d.rows() != 0 : d.rows() != c.dims[k - 1]) return false;
  }
  for (std::size_t k = 2; k < c.boundaries.size(); ++k)
    if (!(c.boundaries[k - 1] * c.boundaries[k]).is_zero()) return false;
  return true;
}

/// Alternating sum of chain dimensions.
inline long long chain_euler(const ChainComplexData& c) {
  long long e = 0;
  for (std::size_t k = 0; k < c.dims.size(); ++k)
    e += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dims[k]);
  return e;
}

inline BettiProfile betti_numbers(const ChainComplexData& c) {
  if (!verify_complex(c)) throw InvariantViolation("ill-formed chain complex: boundary of a boundary is nonzero");
  const std::size_t m = c.dims.size();
  std::vector<std::size_t> ranks(m + 1, 0);
  for (std::size_t k = 1; k < m; ++k) ranks[k] = rank(c.boundaries[k]);
  BettiProfile out;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t b = c.dims[k] - ranks[k] - ranks[k + 1];
    out.betti.push_back(b);
    out.euler += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(b);
  }
  return out;
}

inline BettiProfile betti_profile(const Arrangement& a, std::size_t max_summands = kDefaultMaxSummands) {
  return betti_numbers(build_chain_complex(a, max_summands));
}

/// dim V / span(V_1, ..., V_m).
inline std::size_t h0_dim(const Arrangement& a) {
  a.validate();
  return a.ambient_dim - span_sum(a.ambient_dim, a.subspaces).dim();
}

/// One copy of each subspace not strictly contained in another, in order
/// of first appearance.
inline Arrangement maximal_filter(const Arrangement& a) {
  a.validate();
  Arrangement out{a.ambient_dim, {}};
  for (std::size_t i = 0; i < a.subspaces.size(); ++i) {
    const auto& s = a.subspaces[i];
    bool keep = true;
    for (std::size_t j = 0; j < a.subspaces.size() && keep; ++j) {
      if (i == j) continue;
      const auto& t = a.subspaces[j];
      if (s == t) {
        keep = j > i;
      } else if (subspace_leq(s, t)) {
        keep = false;
      }
    }
    if (keep) out.subspaces.push_back(s);
  }
  return out;
}

}  // namespace raagbns
