#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "locturan/blocks.hpp"
#include "locturan/graph.hpp"

namespace locturan {

// Per-vertex localized weights. p[v] is the number of edges of a longest path
// through v; c[v] is the length of a longest cycle through v, or 2 when v lies
// on no cycle. circumference is max c (0 for the empty graph).
struct VertexWeights {
  std::vector<int> p;
  std::vector<int> c;
  int circumference = 0;

  int max_path() const { return p.empty() ? -1 : *std::max_element(p.begin(), p.end()); }
  friend bool operator==(const VertexWeights&, const VertexWeights&) = default;
};

inline constexpr int kDefaultDpLimit = 18;
inline constexpr int kMaxDpLimit = 22;

namespace detail {

inline void check_dp_limit(const Graph& g, int dp_limit) {
  if (dp_limit > kMaxDpLimit)
    throw ResourceLimit("dp limit " + std::to_string(dp_limit) + " exceeds the hard maximum of " +
                        std::to_string(kMaxDpLimit));
  if (g.order() > dp_limit)
    throw ResourceLimit("exact weights need n <= " + std::to_string(dp_limit) + " (got n = " +
                        std::to_string(g.order()) +
                        "); use compute_weights_block_graph for block graphs or raise the dp limit");
}

// ends[S] holds every u such that some simple path has vertex set exactly S and
// ends at u. With `anchored`, only paths starting at min(S) are recorded.
inline std::vector<std::uint32_t> subset_path_table(const Graph& g, bool anchored) {
  const int n = g.order();
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> ends(size, 0);
  for (Vertex v = 0; v < n; ++v) ends[bit(v)] = static_cast<std::uint32_t>(bit(v));
  for (std::size_t s = 1; s < size; ++s) {
    const std::uint32_t tails = ends[s];
    if (tails == 0) continue;
    const VertexMask set = s;
    const VertexMask allowed = anchored ? ~full_mask(lowest(set) + 1) : ~VertexMask{0};
    for_each_vertex(tails, [&](Vertex u) {
      for_each_vertex(g.neighbors(u) & ~set & allowed, [&](Vertex w) {
        ends[set | bit(w)] |= static_cast<std::uint32_t>(bit(w));
      });
    });
  }
  return ends;
}

}  // namespace detail

// Exact weights by subset dynamic programming over (vertex set, endpoint).
// p(v) is the largest |S|-1 over sets S containing v that some path spans; S
// carries a spanning cycle iff |S| >= 3 and a path from min(S) across S ends
// next to min(S).
inline VertexWeights compute_weights(const Graph& g, int dp_limit = kDefaultDpLimit) {
  detail::check_dp_limit(g, dp_limit);
  const int n = g.order();
  VertexWeights w;
  w.p.assign(static_cast<std::size_t>(n), 0);
  w.c.assign(static_cast<std::size_t>(n), 2);
  if (n == 0) return w;

  const auto paths = detail::subset_path_table(g, false);
  const auto anchored = detail::subset_path_table(g, true);
  const std::size_t size = paths.size();
  for (std::size_t s = 1; s < size; ++s) {
    const VertexMask set = s;
    const int k = popcount(set);
    if (paths[s] != 0) {
      for_each_vertex(set, [&](Vertex v) { w.p[v] = std::max(w.p[v], k - 1); });
    }
    if (k >= 3 && (anchored[s] & g.neighbors(lowest(set))) != 0) {
      for_each_vertex(set, [&](Vertex v) { w.c[v] = std::max(w.c[v], k); });
    }
  }
  w.circumference = *std::max_element(w.c.begin(), w.c.end());
  return w;
}

// Maximum-length simple path starting at v0; among those, the lexicographically
// smallest vertex sequence.
inline std::vector<Vertex> longest_path_from(const Graph& g, Vertex v0, int dp_limit = kDefaultDpLimit) {
  detail::check_dp_limit(g, dp_limit);
  const int n = g.order();
  if (v0 < 0 || v0 >= n) throw ContractViolation("start vertex " + std::to_string(v0) + " not in graph");

  // extra[S*n+u]: most edges a path can still add from u while avoiding S.
  std::vector<std::int8_t> extra((std::size_t{1} << n) * static_cast<std::size_t>(n), -1);
  std::function<int(VertexMask, Vertex)> best = [&](VertexMask set, Vertex u) -> int {
    std::int8_t& slot = extra[set * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)];
    if (slot >= 0) return slot;
    int result = 0;
    for_each_vertex(g.neighbors(u) & ~set, [&](Vertex w) { result = std::max(result, 1 + best(set | bit(w), w)); });
    slot = static_cast<std::int8_t>(result);
    return result;
  };

  std::vector<Vertex> path{v0};
  VertexMask set = bit(v0);
  int remaining = best(set, v0);
  while (remaining > 0) {
    const Vertex u = path.back();
    Vertex chosen = -1;
    for_each_vertex(g.neighbors(u) & ~set, [&](Vertex w) {
      if (chosen < 0 && 1 + best(set | bit(w), w) == remaining) chosen = w;
    });
    path.push_back(chosen);
    set |= bit(chosen);
    --remaining;
  }
  return path;
}

// Structural weights for block graphs. c(v) is the largest order of a block
// containing v (2 if that is below 3). p(v) comes from a longest path in the
// block-cut tree that passes a block containing v, where a block of order b
// contributes b-1 edges.
inline VertexWeights compute_weights_block_graph(const Graph& g) {
  const BlockDecomposition d = block_decomposition(g);
  if (!is_block_graph(g, d)) throw ContractViolation("compute_weights_block_graph needs a block graph");
  const int n = g.order();
  VertexWeights w;
  w.p.assign(static_cast<std::size_t>(n), 0);
  w.c.assign(static_cast<std::size_t>(n), 2);
  if (n == 0) return w;

  const std::size_t blocks = d.block_count();
  for (std::size_t b = 0; b < blocks; ++b) {
    const int order = d.order(b);
    for_each_vertex(d.blocks[b], [&](Vertex v) { w.c[v] = std::max(w.c[v], order >= 3 ? order : 2); });
  }

  // arm(b, x): most edges gained leaving block b through its cut vertex x.
  std::map<std::pair<std::size_t, Vertex>, int> memo;
  std::function<int(std::size_t, Vertex)> arm = [&](std::size_t from, Vertex x) -> int {
    auto key = std::make_pair(from, x);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int result = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      if (b == from || !contains(d.blocks[b], x)) continue;
      int beyond = 0;
      for_each_vertex(d.blocks[b] & d.cut_vertices & ~bit(x), [&](Vertex y) { beyond = std::max(beyond, arm(b, y)); });
      result = std::max(result, d.order(b) - 1 + beyond);
    }
    memo[key] = result;
    return result;
  };

  for (std::size_t b = 0; b < blocks; ++b) {
    int first = 0;
    int second = 0;
    for_each_vertex(d.blocks[b] & d.cut_vertices, [&](Vertex x) {
      const int a = arm(b, x);
      if (a > first) {
        second = first;
        first = a;
      } else if (a > second) {
        second = a;
      }
    });
    const int through = d.order(b) - 1 + first + second;
    for_each_vertex(d.blocks[b], [&](Vertex v) { w.p[v] = std::max(w.p[v], through); });
  }
  w.circumference = *std::max_element(w.c.begin(), w.c.end());
  return w;
}

// Exact DP when the graph is small enough. Larger graphs are split into
// components (weights never cross components); each component goes to the DP
// or, above the limit, to the block-graph shortcut.
inline VertexWeights weights_for(const Graph& g, int dp_limit = kDefaultDpLimit) {
  if (g.order() <= dp_limit) return compute_weights(g, dp_limit);
  const int n = g.order();
  VertexWeights w;
  w.p.assign(static_cast<std::size_t>(n), 0);
  w.c.assign(static_cast<std::size_t>(n), 2);
  for (VertexMask comp : components(g)) {
    std::vector<Vertex> ids;
    const Graph h = induced_subgraph(g, comp, &ids);
    VertexWeights part;
    if (h.order() <= dp_limit) {
      part = compute_weights(h, dp_limit);
    } else if (is_block_graph(h)) {
      part = compute_weights_block_graph(h);
    } else {
      detail::check_dp_limit(h, dp_limit);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      w.p[static_cast<std::size_t>(ids[i])] = part.p[i];
      w.c[static_cast<std::size_t>(ids[i])] = part.c[i];
    }
  }
  w.circumference = *std::max_element(w.c.begin(), w.c.end());
  return w;
}

}  // namespace locturan
