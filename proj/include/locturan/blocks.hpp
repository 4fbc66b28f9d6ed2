#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "locturan/graph.hpp"

namespace locturan {

// Biconnected components of a graph. Bridges are 2-vertex blocks and isolated
// vertices are singleton blocks. The block-cut tree has one node per block
// (ids 0..blocks-1) followed by one node per cut vertex, in cut_ids order.
struct BlockDecomposition {
  std::vector<VertexMask> blocks;
  VertexMask cut_vertices = 0;
  std::vector<Vertex> cut_ids;
  std::vector<std::vector<int>> tree;

  std::size_t block_count() const noexcept { return blocks.size(); }
  int order(std::size_t block) const noexcept { return popcount(blocks[block]); }
  bool is_block_node(int node) const noexcept { return node < static_cast<int>(blocks.size()); }
};

namespace detail {

class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g) : g_(g) {}

  std::vector<VertexMask> run() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (disc_[v] != 0) continue;
      if (g_.degree(v) == 0) {
        disc_[v] = ++timer_;
        blocks_.push_back(bit(v));
        continue;
      }
      visit(v, -1);
    }
    return std::move(blocks_);
  }

 private:
  void visit(Vertex u, Vertex parent) {
    disc_[u] = low_[u] = ++timer_;
    for_each_vertex(g_.neighbors(u), [&](Vertex w) {
      if (disc_[w] == 0) {
        stack_.emplace_back(u, w);
        visit(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) {
          VertexMask block = 0;
          for (;;) {
            auto [a, b] = stack_.back();
            stack_.pop_back();
            block |= bit(a) | bit(b);
            if (a == u && b == w) break;
          }
          blocks_.push_back(block);
        }
      } else if (w != parent && disc_[w] < disc_[u]) {
        stack_.emplace_back(u, w);
        low_[u] = std::min(low_[u], disc_[w]);
      }
    });
  }

  const Graph& g_;
  int timer_ = 0;
  std::array<int, kMaxVertices> disc_{};
  std::array<int, kMaxVertices> low_{};
  std::vector<std::pair<Vertex, Vertex>> stack_;
  std::vector<VertexMask> blocks_;
};

}  // namespace detail

inline BlockDecomposition block_decomposition(const Graph& g) {
  BlockDecomposition d;
  d.blocks = detail::BlockFinder(g).run();
  std::sort(d.blocks.begin(), d.blocks.end(), [](VertexMask a, VertexMask b) {
    return lowest(a) != lowest(b) ? lowest(a) < lowest(b) : a < b;
  });

  std::array<int, kMaxVertices> membership{};
  for (VertexMask b : d.blocks) for_each_vertex(b, [&](Vertex v) { ++membership[v]; });
  for (Vertex v = 0; v < g.order(); ++v)
    if (membership[v] >= 2) d.cut_vertices |= bit(v);
  d.cut_ids = to_vector(d.cut_vertices);

  const int block_nodes = static_cast<int>(d.blocks.size());
  d.tree.assign(d.blocks.size() + d.cut_ids.size(), {});
  for (std::size_t k = 0; k < d.cut_ids.size(); ++k) {
    const int cut_node = block_nodes + static_cast<int>(k);
    for (int b = 0; b < block_nodes; ++b) {
      if (contains(d.blocks[static_cast<std::size_t>(b)], d.cut_ids[k])) {
        d.tree[static_cast<std::size_t>(b)].push_back(cut_node);
        d.tree[static_cast<std::size_t>(cut_node)].push_back(b);
      }
    }
  }
  return d;
}

inline bool induces_clique(const Graph& g, VertexMask m) {
  bool ok = true;
  for_each_vertex(m, [&](Vertex v) { ok = ok && (g.neighbors(v) & m) == (m & ~bit(v)); });
  return ok;
}

// Connected, and every block induces a complete graph. The 0-vertex graph
// counts as a block graph.
inline bool is_block_graph(const Graph& g, const BlockDecomposition& d) {
  if (!is_connected(g)) return false;
  return std::all_of(d.blocks.begin(), d.blocks.end(), [&](VertexMask b) { return induces_clique(g, b); });
}

inline bool is_block_graph(const Graph& g) { return is_block_graph(g, block_decomposition(g)); }

// Parent block of every block when the block-cut tree is rooted at block
// `root`; the root maps to -1.
inline std::vector<int> block_parents(const BlockDecomposition& d, int root) {
  std::vector<int> node_parent(d.tree.size(), -2);
  std::vector<int> block_parent(d.blocks.size(), -1);
  std::vector<int> queue{root};
  node_parent[static_cast<std::size_t>(root)] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int node = queue[head];
    for (int next : d.tree[static_cast<std::size_t>(node)]) {
      if (node_parent[static_cast<std::size_t>(next)] != -2) continue;
      node_parent[static_cast<std::size_t>(next)] = node;
      if (d.is_block_node(next)) block_parent[static_cast<std::size_t>(next)] = node_parent[static_cast<std::size_t>(node)];
      queue.push_back(next);
    }
  }
  return block_parent;
}

// A block graph whose block-cut tree, rooted at some maximum-order block, has
// every non-root block no larger than its parent block. Any maximum-order root
// that works is accepted.
inline bool is_parent_dominated(const Graph& g) {
  if (g.order() <= 1) return true;
  const BlockDecomposition d = block_decomposition(g);
  if (!is_block_graph(g, d)) return false;
  int max_order = 0;
  for (std::size_t b = 0; b < d.block_count(); ++b) max_order = std::max(max_order, d.order(b));
  for (std::size_t root = 0; root < d.block_count(); ++root) {
    if (d.order(root) != max_order) continue;
    const std::vector<int> parent = block_parents(d, static_cast<int>(root));
    bool dominated = true;
    for (std::size_t b = 0; b < d.block_count() && dominated; ++b)
      if (parent[b] >= 0) dominated = d.order(b) <= d.order(static_cast<std::size_t>(parent[b]));
    if (dominated) return true;
  }
  return false;
}

inline bool components_are_cliques(const Graph& g) {
  const auto comps = components(g);
  return std::all_of(comps.begin(), comps.end(), [&](VertexMask c) { return induces_clique(g, c); });
}

}  // namespace locturan
