#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "locturan/error.hpp"

namespace locturan {

using Vertex = int;
// Set of vertex ids, bit v set iff v is a member.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }
constexpr int popcount(VertexMask m) noexcept { return std::popcount(m); }
constexpr bool contains(VertexMask m, Vertex v) noexcept { return (m >> v) & 1U; }
constexpr VertexMask full_mask(int n) noexcept { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }
constexpr Vertex lowest(VertexMask m) noexcept { return std::countr_zero(m); }

template <class F>
constexpr void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::vector<Vertex> to_vector(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

// Simple undirected graph on vertices 0..n-1, n <= 64, one adjacency word per
// vertex. Values are immutable once built; use GraphBuilder to construct.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(popcount(adj_[v]));
    return twice / 2;
  }
  VertexMask vertices() const noexcept { return full_mask(n_); }
  VertexMask neighbors(Vertex v) const noexcept { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return contains(adj_[u], v); }
  int degree(Vertex v) const noexcept { return popcount(adj_[v]); }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < n_; ++v)
      for_each_vertex(adj_[v] & ~full_mask(v + 1), [&](Vertex w) { out.emplace_back(v, w); });
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n) {
    if (n < 0 || n > kMaxVertices)
      throw ContractViolation("graph order " + std::to_string(n) + " outside [0, 64]");
    g_.n_ = n;
  }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
    g_.adj_[u] |= bit(v);
    g_.adj_[v] |= bit(u);
    return *this;
  }

  // Connects every pair inside `m`.
  GraphBuilder& add_clique(VertexMask m) {
    for_each_vertex(m, [&](Vertex v) {
      check(v);
      g_.adj_[v] |= m & ~bit(v);
    });
    return *this;
  }

  int order() const noexcept { return g_.n_; }
  Graph build() const { return g_; }

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= g_.n_)
      throw ContractViolation("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(g_.n_));
  }

  Graph g_;
};

inline Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

inline Graph empty_graph(int n) { return GraphBuilder(n).build(); }

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  b.add_clique(full_mask(n));
  return b.build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph cycle_graph(int n) {
  if (n == 1 || n == 2)
    throw ContractViolation("cycle_graph needs n = 0 or n >= 3, got " + std::to_string(n));
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex v = 0; v < 5; ++v) {
    b.add_edge(v, (v + 1) % 5);          // outer 5-cycle
    b.add_edge(v, v + 5);                // spokes
    b.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
  }
  return b.build();
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out.build();
}

// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in increasing id order.
// `original` receives the old id of each new vertex when non-null.
inline Graph induced_subgraph(const Graph& g, VertexMask keep, std::vector<Vertex>* original = nullptr) {
  keep &= g.vertices();
  std::array<Vertex, kMaxVertices> relabel{};
  std::vector<Vertex> ids = to_vector(keep);
  for (std::size_t i = 0; i < ids.size(); ++i) relabel[ids[i]] = static_cast<Vertex>(i);
  GraphBuilder b(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for_each_vertex(g.neighbors(ids[i]) & keep, [&](Vertex w) {
      if (relabel[w] > static_cast<Vertex>(i)) b.add_edge(static_cast<Vertex>(i), relabel[w]);
    });
  if (original != nullptr) *original = std::move(ids);
  return b.build();
}

// Maps a mask over a relabelled subgraph back to original ids.
inline VertexMask lift_mask(VertexMask local, const std::vector<Vertex>& original) {
  VertexMask out = 0;
  for_each_vertex(local, [&](Vertex v) { out |= bit(original[static_cast<std::size_t>(v)]); });
  return out;
}

inline VertexMask component_of(const Graph& g, Vertex v) {
  VertexMask seen = bit(v);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex u) { next |= g.neighbors(u); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

inline std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask rest = g.vertices();
  while (rest != 0) {
    VertexMask c = component_of(g, lowest(rest));
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.order() == 0 || component_of(g, 0) == g.vertices();
}

inline VertexMask isolated_vertices(const Graph& g, VertexMask within) {
  VertexMask out = 0;
  for_each_vertex(within, [&](Vertex v) {
    if ((g.neighbors(v) & within) == 0) out |= bit(v);
  });
  return out;
}

}  // namespace locturan
