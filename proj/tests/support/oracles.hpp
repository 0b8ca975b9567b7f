#pragma once

// Brute-force reference implementations used only by the tests. They work
// straight from the definitions and share no code paths with the library
// beyond the basic graph and word types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "raagbns/raagbns.hpp"

namespace oracle {

using namespace raagbns;

/// Connected components of the subgraph induced on `allowed`, by repeated
/// flood fill over the adjacency predicate.
inline std::vector<VertexMask> components(const SimpleGraph& g, VertexMask allowed) {
  std::vector<VertexMask> out;
  VertexMask left = allowed;
  while (left) {
    VertexId seed = 0;
    while (!has(left, seed)) ++seed;
    VertexMask comp = bit(seed);
    bool grew = true;
    while (grew) {
      grew = false;
      for (VertexId u = 0; u < g.size(); ++u) {
        if (!has(left, u) || has(comp, u)) continue;
        for (VertexId v = 0; v < g.size(); ++v)
          if (has(comp, v) && g.adjacent(u, v)) {
            comp |= bit(u);
            grew = true;
            break;
          }
      }
    }
    out.push_back(comp);
    left &= ~comp;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexMask star_complement(const SimpleGraph& g, VertexId a) {
  VertexMask m = 0;
  for (VertexId v = 0; v < g.size(); ++v)
    if (v != a && !g.adjacent(a, v)) m |= bit(v);
  return m;
}

/// Standard generators (a, K) for every vertex a and component K of Γ−st(a).
inline std::vector<std::pair<VertexId, VertexMask>> generators(const SimpleGraph& g) {
  std::vector<std::pair<VertexId, VertexMask>> out;
  for (VertexId a = 0; a < g.size(); ++a)
    for (VertexMask k : components(g, star_complement(g, a))) out.emplace_back(a, k);
  return out;
}

/// Definition check over every nontrivial two-block partition.
inline bool is_set(SetKind kind, const std::vector<std::pair<VertexId, VertexMask>>& s) {
  if (s.size() < 2) return false;
  std::vector<std::size_t> per(64, 0);
  for (const auto& [a, k] : s) ++per[a];
  for (std::size_t c : per) {
    if (kind == SetKind::p && c > 1) return false;
    if (kind == SetKind::delta && c != 0 && c != 2) return false;
  }
  const std::size_t n = s.size();
  for (std::uint64_t side = 1; side + 1 < (std::uint64_t{1} << n); ++side) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!((side >> i) & 1U) || ((side >> j) & 1U)) continue;
        const auto& [a, k] = s[i];
        const auto& [b, l] = s[j];
        const bool a_in_l = has(l, a), b_in_k = has(k, b);
        ok = kind == SetKind::p ? (a_in_l && b_in_k) : (a_in_l || b_in_k || k == l);
      }
    if (ok) return true;
  }
  return false;
}

/// All maximal sets of the given kind, as sorted index lists into
/// `generators(g)`, found by testing every subset.
inline std::vector<std::vector<std::size_t>> maximal_sets(SetKind kind, const SimpleGraph& g) {
  const auto gens = generators(g);
  const std::size_t n = gens.size();
  std::vector<std::uint64_t> valid;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    std::vector<std::pair<VertexId, VertexMask>> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.push_back(gens[i]);
    if (is_set(kind, s)) valid.push_back(m);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t m : valid) {
    const bool dominated =
        std::any_of(valid.begin(), valid.end(), [&](std::uint64_t x) { return x != m && (x & m) == m; });
    if (dominated) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) idx.push_back(i);
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexMask> maximal_disconnected(const SimpleGraph& g) {
  std::vector<VertexMask> valid;
  for (VertexMask m = 1; m < (VertexMask{1} << g.size()); ++m)
    if (components(g, m).size() >= 2) valid.push_back(m);
  std::vector<VertexMask> out;
  for (VertexMask m : valid)
    if (std::none_of(valid.begin(), valid.end(), [&](VertexMask x) { return x != m && (x & m) == m; }))
      out.push_back(m);
  return out;
}

/// Checks the component classification for a nonadjacent pair: each
/// component of Γ−st(a) other than [b]_a is either contained in [a]_b or is
/// itself a component of Γ−st(b), and shared components are exactly those
/// components of Γ−(lk a ∩ lk b) avoiding both a and b.
inline bool pair_classification_holds(const SimpleGraph& g, VertexId a, VertexId b) {
  const auto ca = components(g, star_complement(g, a));
  const auto cb = components(g, star_complement(g, b));
  VertexMask dom_b = 0;
  for (VertexMask l : cb)
    if (has(l, a)) dom_b = l;
  std::vector<VertexMask> shared;
  for (VertexMask k : ca) {
    if (has(k, b)) continue;
    const bool sub = (k & dom_b) == k;
    const bool sh = std::find(cb.begin(), cb.end(), k) != cb.end();
    if (sub == sh) return false;
    if (sh) shared.push_back(k);
  }
  const VertexMask common = g.neighbors(a) & g.neighbors(b);
  std::vector<VertexMask> avoiding;
  for (VertexMask c : components(g, g.all() & ~common))
    if (!has(c, a) && !has(c, b)) avoiding.push_back(c);
  std::sort(shared.begin(), shared.end());
  return shared == avoiding;
}

/// Every word of length ≤ max_len over the 2n letters, closed under the
/// defining rewrites (swapping adjacent commuting letters, cancelling x x⁻¹).
/// Words are numbered in shortlex order and the union-find keeps the least
/// index as root, so each root is the shortlex-least word of its class.
class RewritingClosure {
 public:
  RewritingClosure(const SimpleGraph& g, std::size_t max_len) : alphabet_(2 * g.size()), max_len_(max_len) {
    offset_.push_back(0);
    std::uint64_t count = 1;
    for (std::size_t l = 0; l <= max_len; ++l) {
      offset_.push_back(offset_.back() + count);
      count *= alphabet_;
    }
    parent_.resize(offset_.back());
    std::iota(parent_.begin(), parent_.end(), 0U);
    commutes_.assign(alphabet_ * alphabet_, false);
    for (std::size_t x = 0; x < alphabet_; ++x)
      for (std::size_t y = 0; y < alphabet_; ++y)
        commutes_[x * alphabet_ + y] = x / 2 != y / 2 && g.adjacent(static_cast<VertexId>(x / 2), static_cast<VertexId>(y / 2));
    std::vector<std::size_t> digits;
    for (std::size_t l = 2; l <= max_len; ++l)
      for (std::uint64_t v = 0; v < offset_[l + 1] - offset_[l]; ++v) {
        digits = decode_value(v, l);
        const std::uint64_t here = offset_[l] + v;
        for (std::size_t i = 0; i + 1 < l; ++i) {
          const std::size_t x = digits[i], y = digits[i + 1];
          if (commutes_[x * alphabet_ + y]) {
            std::swap(digits[i], digits[i + 1]);
            unite(here, index_of(digits));
            std::swap(digits[i], digits[i + 1]);
          } else if ((x ^ 1U) == y) {
            std::vector<std::size_t> shorter(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(i));
            shorter.insert(shorter.end(), digits.begin() + static_cast<std::ptrdiff_t>(i + 2), digits.end());
            unite(here, index_of(shorter));
          }
        }
      }
  }

  [[nodiscard]] std::uint64_t size() const { return parent_.size(); }

  [[nodiscard]] Word word(std::uint64_t index) const {
    std::size_t l = 0;
    while (offset_[l + 1] <= index) ++l;
    Word w;
    for (std::size_t c : decode_value(index - offset_[l], l))
      w.push_back(Letter{static_cast<VertexId>(c / 2), c % 2 ? -1 : 1});
    return w;
  }

  /// Shortlex-least word equal to the word with this index.
  [[nodiscard]] Word least(std::uint64_t index) { return word(find(index)); }

  [[nodiscard]] std::uint64_t index_of(const Word& w) const {
    std::uint64_t v = 0;
    for (const Letter& l : w) v = v * alphabet_ + l.code();
    return offset_.at(w.size()) + v;
  }

  /// Calls f(index, word) for every word in shortlex order, reusing one buffer.
  template <class F>
  void for_each_word(F&& f) const {
    Word w;
    std::uint64_t index = 0;
    for (std::size_t l = 0; l <= max_len_; ++l) {
      w.assign(l, Letter{0, 1});
      for (std::uint64_t v = 0; v < offset_[l + 1] - offset_[l]; ++v, ++index) {
        f(index, static_cast<const Word&>(w));
        for (std::size_t i = l; i-- > 0;) {
          const std::size_t c = w[i].code() + 1;
          if (c < alphabet_) {
            w[i] = Letter{static_cast<VertexId>(c / 2), c % 2 ? -1 : 1};
            break;
          }
          w[i] = Letter{0, 1};
        }
      }
    }
  }
  std::uint64_t find(std::uint64_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

 private:
  std::vector<std::size_t> decode_value(std::uint64_t v, std::size_t l) const {
    std::vector<std::size_t> d(l);
    for (std::size_t i = l; i-- > 0;) {
      d[i] = static_cast<std::size_t>(v % alphabet_);
      v /= alphabet_;
    }
    return d;
  }

  std::uint64_t index_of(const std::vector<std::size_t>& d) const {
    std::uint64_t v = 0;
    for (std::size_t c : d) v = v * alphabet_ + c;
    return offset_[d.size()] + v;
  }

  void unite(std::uint64_t x, std::uint64_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x < y) std::swap(x, y);
    parent_[x] = static_cast<std::uint32_t>(y);
  }

  std::size_t alphabet_;
  std::size_t max_len_;
  std::vector<std::uint64_t> offset_;
  std::vector<std::uint32_t> parent_;
  std::vector<bool> commutes_;
};

inline SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) pairs.emplace_back(u, v);
  return graph_from_pairs(n, pairs);
}

inline Word random_word(const SimpleGraph& g, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> letter(0, 2 * g.size() - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t c = letter(rng);
    w.push_back(Letter{static_cast<VertexId>(c / 2), c % 2 ? -1 : 1});
  }
  return w;
}

}  // namespace oracle
