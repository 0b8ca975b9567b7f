#pragma once

// Graph families used for corpus runs: every graph on up to five vertices
// up to isomorphism, plus a fixed selection of larger graphs.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "raagbns/error.hpp"
#include "raagbns/graph.hpp"

namespace raagbns {

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

inline std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline SimpleGraph graph_from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const auto labels = letter_labels(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : pairs) edges.emplace_back(labels.at(u), labels.at(v));
  return SimpleGraph(labels, edges);
}

/// One representative per isomorphism class of graphs on n vertices, in
/// order of edge count and then canonical code. Exhaustive over all
/// labellings, so only meant for small n.
inline std::vector<SimpleGraph> graphs_up_to_isomorphism(std::size_t n) {
  if (n > 6) throw InputError("isomorphism-class enumeration is limited to 6 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<std::size_t>> slot_index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    slot_index[slots[s].first][slots[s].second] = s;
    slot_index[slots[s].second][slots[s].first] = s;
  }
  std::vector<std::uint32_t> codes;
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << slots.size()); ++code) {
    std::uint32_t best = code;
    for (const auto& perm : perms) {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((code >> s) & 1U) image |= std::uint32_t{1} << slot_index[perm[slots[s].first]][perm[slots[s].second]];
      best = std::min(best, image);
    }
    if (best == code) codes.push_back(code);
  }
  std::stable_sort(codes.begin(), codes.end(),
                   [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });
  std::vector<SimpleGraph> out;
  for (std::uint32_t code : codes) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((code >> s) & 1U) pairs.push_back(slots[s]);
    out.push_back(graph_from_pairs(n, pairs));
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> cycle_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(i, (i + 1) % n);
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> path_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
  return out;
}

/// Hand-picked graphs on six to eight vertices whose generator-set
/// enumerations stay well inside the default node budget.
inline std::vector<NamedGraph> selected_larger_graphs() {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    out.push_back(NamedGraph{std::move(name), graph_from_pairs(n, pairs)});
  };
  add("cycle6", 6, cycle_pairs(6));
  add("cycle7", 7, cycle_pairs(7));
  add("path8", 8, path_pairs(8));
  add("path6", 6, path_pairs(6));
  add("path7", 7, path_pairs(7));
  add("star5", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  add("two_triangles", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  add("prism", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  add("octahedron", 6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  add("hexagon_chord", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  add("bipartite_2_4", 6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
  add("wheel5", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  add("spider3", 7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  add("caterpillar8", 8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  add("cube", 8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  add("triangle_pendants", 6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  return out;
}

/// Every graph on 1..5 vertices up to isomorphism (named "n<k>_<index>"),
/// followed by the selected larger graphs.
inline std::vector<NamedGraph> standard_corpus(std::size_t max_small = 5, bool include_larger = true) {
  std::vector<NamedGraph> out;
  for (std::size_t n = 1; n <= max_small; ++n) {
    const auto graphs = graphs_up_to_isomorphism(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      std::string index = std::to_string(i);
      index.insert(0, 2 - std::min<std::size_t>(2, index.size()), '0');
      out.push_back(NamedGraph{"n" + std::to_string(n) + "_" + index, graphs[i]});
    }
  }
  if (include_larger)
    for (auto& g : selected_larger_graphs()) out.push_back(std::move(g));
  return out;
}

}  // namespace raagbns
