#pragma once

// Standard generators π^a_K (a vertex, K a component of Γ−st(a)) and the
// character coordinates χ^a_K they index.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "raagbns/error.hpp"
#include "raagbns/graph.hpp"

namespace raagbns {

struct StandardGenerator {
  VertexId multiplier = 0;
  Component component;

  friend bool operator==(const StandardGenerator&, const StandardGenerator&) = default;
  friend bool operator<(const StandardGenerator& x, const StandardGenerator& y) {
    if (x.multiplier != y.multiplier) return x.multiplier < y.multiplier;
    return x.component < y.component;
  }
};

inline std::string component_name(const SimpleGraph& g, const Component& c) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : c.vertices()) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

inline std::string generator_name(const SimpleGraph& g, const StandardGenerator& s) {
  return "pi(" + g.label(s.multiplier) + ";" + component_name(g, s.component) + ")";
}

/// All standard generators of a graph in (multiplier, component) order,
/// with each multiplier's generators forming a contiguous block.
class CharacterBasis {
 public:
  CharacterBasis() = default;

  explicit CharacterBasis(const SimpleGraph& g) : block_begin_(g.size() + 1, 0) {
    for (VertexId a = 0; a < g.size(); ++a) {
      block_begin_[a] = generators_.size();
      for (auto& k : complement_components(g, a)) generators_.push_back(StandardGenerator{a, k});
    }
    block_begin_[g.size()] = generators_.size();
  }

  [[nodiscard]] std::size_t size() const { return generators_.size(); }
  [[nodiscard]] const std::vector<StandardGenerator>& generators() const { return generators_; }
  [[nodiscard]] const StandardGenerator& operator[](std::size_t i) const { return generators_.at(i); }

  /// Index range [first, second) of the generators with multiplier a.
  [[nodiscard]] std::pair<std::size_t, std::size_t> block(VertexId a) const {
    return {block_begin_.at(a), block_begin_.at(a + 1)};
  }
  [[nodiscard]] std::size_t block_size(VertexId a) const { return block_begin_.at(a + 1) - block_begin_.at(a); }

  [[nodiscard]] std::size_t index_of(VertexId a, const Component& k) const {
    const auto [lo, hi] = block(a);
    const auto first = generators_.begin() + static_cast<std::ptrdiff_t>(lo);
    const auto last = generators_.begin() + static_cast<std::ptrdiff_t>(hi);
    auto it = std::lower_bound(first, last, StandardGenerator{a, k});
    if (it == last || !(it->component == k)) throw InputError("not a component of the complement of the star");
    return static_cast<std::size_t>(it - generators_.begin());
  }

 private:
  std::vector<StandardGenerator> generators_;
  std::vector<std::size_t> block_begin_;
};

}  // namespace raagbns
