#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "locturan/graph.hpp"

namespace locturan {

inline constexpr int kMaxEnumerationOrder = 8;
inline constexpr int kMaxCanonicalOrder = 11;  // n(n-1)/2 bits must fit one word

// Canonical code of a graph: the lexicographically smallest adjacency
// bit-string over all vertex permutations, reading the upper triangle column by
// column ((0,1),(0,2),(1,2),(0,3),...), packed most-significant-first into a
// word. Two graphs are isomorphic iff their codes and orders match.
//
// The minimum is exact. Permutations are explored position by position and a
// branch is cut as soon as its already-fixed prefix exceeds the best complete
// string found so far.
struct CanonicalForm {
  std::uint64_t code = 0;
  std::array<Vertex, kMaxCanonicalOrder> order{};  // position -> original vertex
};

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    best_cols_.fill(~std::uint32_t{0});
  }

  CanonicalForm run() {
    if (n_ <= 1) {
      CanonicalForm f;
      if (n_ == 1) f.order[0] = 0;
      return f;
    }
    descend(0, 0, false);
    CanonicalForm f;
    f.order = best_order_;
    std::uint64_t code = 0;
    for (int j = 1; j < n_; ++j) code = (code << j) | best_cols_[j];
    f.code = code;
    return f;
  }

 private:
  // `less` is true once the current prefix is strictly below the best one.
  void descend(int depth, VertexMask used, bool less) {
    if (depth == n_) {
      best_cols_ = cols_;
      best_order_ = order_;
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (contains(used, v)) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
      bool next_less = less;
      if (!less && depth > 0) {
        if (col > best_cols_[depth]) continue;
        next_less = col < best_cols_[depth];
      }
      cols_[depth] = col;
      order_[depth] = v;
      descend(depth + 1, used | bit(v), next_less);
      // After a leaf replaced the best, the tail of this prefix is no longer
      // strictly smaller than it; recompute the relation for later siblings.
      if (less) less = prefix_less(depth);
    }
  }

  bool prefix_less(int depth) const {
    for (int j = 1; j < depth; ++j) {
      if (cols_[j] != best_cols_[j]) return cols_[j] < best_cols_[j];
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<std::uint32_t, kMaxCanonicalOrder> cols_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_cols_{};
  std::array<Vertex, kMaxCanonicalOrder> order_{};
  std::array<Vertex, kMaxCanonicalOrder> best_order_{};
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw ResourceLimit("canonical labelling supports n <= 11, got " + std::to_string(g.order()));
  return detail::CanonicalSearch(g).run();
}

inline std::uint64_t canonical_code(const Graph& g) { return canonical_form(g).code; }

// The representative graph carrying the canonical code.
inline Graph canonical_graph(const Graph& g) {
  const CanonicalForm f = canonical_form(g);
  std::array<Vertex, kMaxCanonicalOrder> position{};
  for (int i = 0; i < g.order(); ++i) position[f.order[i]] = i;
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(position[u], position[v]);
  return b.build();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

// One representative per isomorphism class on n vertices, in increasing
// canonical-code order. Built by vertex augmentation of the (n-1)-vertex
// representatives, deduplicated by canonical code.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only = false) {
  if (n < 0) throw ContractViolation("enumerate_graphs needs n >= 0");
  if (n > kMaxEnumerationOrder)
    throw ResourceLimit("enumerate_graphs is limited to n <= 8, got " + std::to_string(n));

  std::vector<Graph> level{empty_graph(0)};
  for (int m = 1; m <= n; ++m) {
    std::unordered_map<std::uint64_t, Graph> seen;
    for (const Graph& h : level) {
      for (VertexMask nb = 0; nb <= full_mask(m - 1); ++nb) {
        GraphBuilder b(m);
        for (auto [u, v] : h.edges()) b.add_edge(u, v);
        for_each_vertex(nb, [&](Vertex v) { b.add_edge(v, m - 1); });
        Graph g = b.build();
        const std::uint64_t code = canonical_code(g);
        if (!seen.contains(code)) seen.emplace(code, canonical_graph(g));
      }
    }
    std::vector<std::pair<std::uint64_t, Graph>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, g] : sorted) level.push_back(g);
  }
  if (connected_only) std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  return level;
}

// All 2^C(n,2) labelled graphs on n vertices, in edge-bitmask order.
inline std::vector<Graph> labeled_graphs(int n) {
  if (n < 0 || n > 6) throw ResourceLimit("labeled_graphs is limited to n <= 6");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    GraphBuilder b(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) b.add_edge(pairs[k].first, pairs[k].second);
    out.push_back(b.build());
  }
  return out;
}

}  // namespace locturan
