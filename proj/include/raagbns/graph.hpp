#pragma once

// The defining graph: stars, links, complementary components, the
// dominating/subordinate/shared classification of a nonadjacent pair,
// and the support graphs built from it.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "raagbns/error.hpp"

namespace raagbns {

using VertexId = std::size_t;
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline VertexMask bit(VertexId v) { return VertexMask{1} << v; }
inline bool has(VertexMask m, VertexId v) { return (m >> v) & 1U; }
inline std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline std::vector<VertexId> members_of(VertexMask m) {
  std::vector<VertexId> out;
  while (m) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// Lexicographic order of the ascending index sequences of two masks.
inline bool mask_lex_less(VertexMask a, VertexMask b) {
  while (a && b) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Finite simple graph on string-labelled vertices. Vertices are stored in
/// lexicographic label order, so vertex ids order the same way as labels.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  SimpleGraph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
      : labels_(std::move(vertices)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
      throw InputError("duplicate vertex label");
    if (labels_.size() > kMaxVertices) throw InputError("graphs are limited to 64 vertices");
    adjacency_.assign(labels_.size(), 0);
    for (const auto& [u, v] : edges) {
      const VertexId a = index_of(u);
      const VertexId b = index_of(v);
      if (a == b) throw InputError("self-loop at '" + u + "'");
      if (has(adjacency_[a], b)) throw InputError("duplicate edge {" + u + ", " + v + "}");
      adjacency_[a] |= bit(b);
      adjacency_[b] |= bit(a);
    }
  }

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(VertexId v) const { return labels_.at(v); }

  [[nodiscard]] std::optional<VertexId> find(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
  }

  [[nodiscard]] VertexId index_of(const std::string& label) const {
    if (auto v = find(label)) return *v;
    throw InputError("unknown vertex '" + label + "'");
  }

  [[nodiscard]] bool adjacent(VertexId u, VertexId v) const { return has(adjacency_.at(u), v); }
  [[nodiscard]] VertexMask neighbors(VertexId v) const { return adjacency_.at(v); }
  [[nodiscard]] VertexMask star(VertexId v) const { return adjacency_.at(v) | bit(v); }
  [[nodiscard]] VertexMask all() const {
    return labels_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << labels_.size()) - 1;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  [[nodiscard]] std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < size(); ++u)
      for (VertexId v : members_of(adjacency_[u]))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<VertexMask> adjacency_;
};

/// A connected vertex set of some full subgraph.
struct Component {
  VertexMask members = 0;

  [[nodiscard]] bool contains(VertexId v) const { return has(members, v); }
  [[nodiscard]] std::vector<VertexId> vertices() const { return members_of(members); }

  friend bool operator==(const Component&, const Component&) = default;
  friend bool operator<(const Component& a, const Component& b) { return mask_lex_less(a.members, b.members); }
};

inline std::vector<std::string> component_labels(const SimpleGraph& g, const Component& c) {
  std::vector<std::string> out;
  for (VertexId v : c.vertices()) out.push_back(g.label(v));
  return out;
}

/// Connected components of the full subgraph on `allowed`, sorted lexicographically.
inline std::vector<Component> components_within(const SimpleGraph& g, VertexMask allowed) {
  std::vector<Component> out;
  VertexMask unseen = allowed;
  while (unseen) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexId v : members_of(frontier)) next |= g.neighbors(v);
      next &= allowed & ~comp;
      comp |= next;
      frontier = next;
    }
    unseen &= ~comp;
    out.push_back(Component{comp});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_connected_set(const SimpleGraph& g, VertexMask s) {
  return s != 0 && components_within(g, s).size() == 1;
}

inline VertexMask link(const SimpleGraph& g, VertexId v) { return g.neighbors(v); }

inline std::vector<Component> complement_components(const SimpleGraph& g, VertexId a) {
  return components_within(g, g.all() & ~g.star(a));
}

/// The classification of the components of Γ−st(a) and Γ−st(b) for a
/// nonadjacent pair: one dominating component on each side, subordinate
/// components contained in the other side's dominating component, and the
/// shared components common to both lists.
struct PairClassification {
  Component dominating_a;  // [b]_a
  Component dominating_b;  // [a]_b
  std::vector<Component> subordinate_a;
  std::vector<Component> subordinate_b;
  std::vector<Component> shared;
};

inline PairClassification classify_pair(const SimpleGraph& g, VertexId a, VertexId b) {
  if (a == b || g.adjacent(a, b)) throw InputError("classify_pair needs two distinct nonadjacent vertices");
  const auto comps_a = complement_components(g, a);
  const auto comps_b = complement_components(g, b);
  PairClassification out;
  for (const auto& k : comps_a) {
    if (k.contains(b)) {
      out.dominating_a = k;
    } else if (std::find(comps_b.begin(), comps_b.end(), k) != comps_b.end()) {
      out.shared.push_back(k);
    } else {
      out.subordinate_a.push_back(k);
    }
  }
  for (const auto& l : comps_b) {
    if (l.contains(a)) {
      out.dominating_b = l;
    } else if (std::find(comps_a.begin(), comps_a.end(), l) == comps_a.end()) {
      out.subordinate_b.push_back(l);
    }
  }
  return out;
}

inline bool is_sil_pair(const SimpleGraph& g, VertexId a, VertexId b) {
  if (a == b || g.adjacent(a, b)) return false;
  return !classify_pair(g, a, b).shared.empty();
}

/// The separating-intersection-of-links test stated directly: some
/// component of Γ − (lk(a) ∩ lk(b)) contains neither a nor b.
inline bool is_sil_pair_by_links(const SimpleGraph& g, VertexId a, VertexId b) {
  if (a == b || g.adjacent(a, b)) return false;
  const VertexMask removed = g.neighbors(a) & g.neighbors(b);
  for (const auto& c : components_within(g, g.all() & ~removed))
    if (!c.contains(a) && !c.contains(b)) return true;
  return false;
}

inline std::size_t center_rank(const SimpleGraph& g) {
  std::size_t count = 0;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.star(v) == g.all()) ++count;
  return count;
}

/// Δ_a: one node per component of Γ−st(a); {K, L} is an edge when some
/// b ∈ K has L as a shared component of (a, b).
struct SupportGraph {
  VertexId owner = 0;
  std::vector<Component> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted

  [[nodiscard]] std::size_t node_index(const Component& c) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
    if (it == nodes.end() || !(*it == c)) throw InputError("component is not a node of this support graph");
    return static_cast<std::size_t>(it - nodes.begin());
  }

  [[nodiscard]] std::optional<std::size_t> edge_index(std::size_t i, std::size_t j) const {
    const auto key = std::minmax(i, j);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair<std::size_t, std::size_t>(key.first, key.second));
    if (it == edges.end() || *it != std::pair<std::size_t, std::size_t>(key.first, key.second)) return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
  }

  [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& [i, j] : edges) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }
};

inline SupportGraph support_graph(const SimpleGraph& g, VertexId a) {
  SupportGraph d;
  d.owner = a;
  d.nodes = complement_components(g, a);
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    for (VertexId b : d.nodes[i].vertices()) {
      for (const auto& shared : classify_pair(g, a, b).shared) {
        const std::size_t j = d.node_index(shared);
        d.edges.emplace_back(std::min(i, j), std::max(i, j));
      }
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  d.edges.erase(std::unique(d.edges.begin(), d.edges.end()), d.edges.end());
  return d;
}

struct ForestData {
  std::vector<std::vector<std::size_t>> trees;  // node indices, each sorted; ordered by least node
};

struct LoopWitness {
  std::vector<std::size_t> cycle;  // distinct nodes, consecutive ones adjacent, closing up
};

using ForestCertificate = std::variant<ForestData, LoopWitness>;

/// Either the maximal subtrees of a forest, or a shortest cycle.
inline ForestCertificate forest_certificate(const SupportGraph& d) {
  const auto adj = d.adjacency();
  const std::size_t n = d.nodes.size();
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, SIZE_MAX), parent(n, SIZE_MAX);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && u < w) {
          // Non-tree edge: close the two BFS paths back to s.
          std::vector<std::size_t> left, right;
          for (std::size_t x = u; x != SIZE_MAX; x = parent[x]) left.push_back(x);
          for (std::size_t x = w; x != SIZE_MAX; x = parent[x]) right.push_back(x);
          while (left.size() > 1 && right.size() > 1 && left[left.size() - 2] == right[right.size() - 2]) {
            left.pop_back();
            right.pop_back();
          }
          std::vector<std::size_t> cycle(left.rbegin(), left.rend());
          for (std::size_t i = 0; i + 1 < right.size(); ++i) cycle.push_back(right[i]);
          auto sorted = cycle;
          std::sort(sorted.begin(), sorted.end());
          const bool simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
          if (simple && cycle.size() >= 3 && (!best || cycle.size() < best->size())) best = cycle;
        }
      }
    }
  }
  if (best) {
    // Rotate so the least node comes first.
    auto& cyc = *best;
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    return LoopWitness{cyc};
  }
  ForestData forest;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> tree;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      tree.push_back(u);
      for (std::size_t w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(tree.begin(), tree.end());
    forest.trees.push_back(std::move(tree));
  }
  return forest;
}

}  // namespace raagbns
