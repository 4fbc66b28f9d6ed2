#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "locturan/graph.hpp"

namespace locturan {

// Deterministic helpers over mt19937_64, whose output sequence is fixed by the
// standard; the distributions below avoid implementation-defined std ones.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

// G(n, p): each of the C(n,2) pairs, in (i<j) row order, is an edge with probability p.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractViolation("edge probability must lie in [0, 1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.chance(p)) b.add_edge(i, j);
  return b.build();
}

// G(n, p) conditioned on connectivity by resampling with successive seeds
// derived from `seed`.
inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n > 1 && p <= 0.0) throw ContractViolation("p = 0 never yields a connected graph for n > 1");
  Rng seeds(seed);
  for (;;) {
    Graph g = random_graph(n, p, seeds.next());
    if (is_connected(g)) return g;
  }
}

// Shape of a block graph: block 0 is the root, block i > 0 hangs off
// parents[i-1] at one shared cut vertex. An empty `parents` means the blocks
// form a chain 0-1-2-... . attachments[i-1] optionally selects which vertex of
// the parent block is shared, as an index into that block's vertex list (for a
// non-root block, index 0 is the vertex it shares with its own parent); -1 or a
// missing entry picks the lowest-id parent vertex not yet used as a cut vertex.
struct BlockSpec {
  std::vector<int> orders;
  std::vector<int> parents;
  std::vector<int> attachments;

  int parent_of(std::size_t block) const {
    return parents.empty() ? static_cast<int>(block) - 1 : parents[block - 1];
  }
  int vertex_count() const {
    int total = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) total += orders[i] - (i == 0 ? 0 : 1);
    return total;
  }
};

namespace detail {

inline void validate_block_tree(const BlockSpec& spec) {
  if (spec.orders.empty()) throw ContractViolation("block spec has no blocks");
  if (!spec.parents.empty() && spec.parents.size() + 1 != spec.orders.size())
    throw ContractViolation("block spec needs one parent per non-root block");
  if (spec.attachments.size() >= spec.orders.size() && !spec.attachments.empty())
    throw ContractViolation("block spec has more attachments than non-root blocks");
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    if (spec.orders[i] < 2)
      throw ContractViolation("block " + std::to_string(i) + " has order " + std::to_string(spec.orders[i]) +
                              " < 2");
    if (i > 0) {
      const int parent = spec.parent_of(i);
      if (parent < 0 || parent >= static_cast<int>(i))
        throw ContractViolation("block " + std::to_string(i) + " must hang off an earlier block");
    }
  }
  if (spec.vertex_count() > kMaxVertices)
    throw ContractViolation("block spec needs " + std::to_string(spec.vertex_count()) + " > 64 vertices");
}

}  // namespace detail

// Realises any block spec (no order constraints beyond >= 2).
inline Graph build_block_graph(const BlockSpec& spec) {
  detail::validate_block_tree(spec);
  const int n = spec.vertex_count();
  std::vector<std::vector<Vertex>> members(spec.orders.size());
  VertexMask cut = 0;
  Vertex next = 0;
  GraphBuilder b(n);
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    std::vector<Vertex>& block = members[i];
    if (i > 0) {
      const auto& parent = members[static_cast<std::size_t>(spec.parent_of(i))];
      const int choice = i - 1 < spec.attachments.size() ? spec.attachments[i - 1] : -1;
      Vertex shared = -1;
      if (choice >= 0) {
        if (choice >= static_cast<int>(parent.size()))
          throw ContractViolation("attachment index " + std::to_string(choice) + " outside parent block");
        shared = parent[static_cast<std::size_t>(choice)];
      } else {
        const std::size_t first_own = spec.parent_of(i) == 0 ? 0 : 1;
        for (std::size_t k = first_own; k < parent.size() && shared < 0; ++k)
          if (!contains(cut, parent[k])) shared = parent[k];
        if (shared < 0) shared = parent[first_own];
      }
      cut |= bit(shared);
      block.push_back(shared);
    }
    while (static_cast<int>(block.size()) < spec.orders[i]) block.push_back(next++);
    VertexMask m = 0;
    for (Vertex v : block) m |= bit(v);
    b.add_clique(m);
  }
  return b.build();
}

// Parent-dominated block graph: refuses specs where the root is not of maximum
// order or a block is larger than its parent.
inline Graph generate_pdbg(const BlockSpec& spec) {
  detail::validate_block_tree(spec);
  for (std::size_t i = 1; i < spec.orders.size(); ++i) {
    if (spec.orders[i] > spec.orders[0])
      throw ContractViolation("block " + std::to_string(i) + " is larger than the root block");
    const int parent = spec.parent_of(i);
    if (spec.orders[i] > spec.orders[static_cast<std::size_t>(parent)])
      throw ContractViolation("block " + std::to_string(i) + " (order " + std::to_string(spec.orders[i]) +
                              ") is larger than its parent block " + std::to_string(parent) + " (order " +
                              std::to_string(spec.orders[static_cast<std::size_t>(parent)]) + ")");
  }
  return build_block_graph(spec);
}

// Random parent-dominated spec with at most `max_blocks` blocks of order in
// [2, max_order]. Blocks that would push the graph past `max_vertices` are not added.
inline BlockSpec random_pdbg_spec(Rng& rng, int max_blocks, int max_order, int max_vertices = kMaxVertices) {
  BlockSpec spec;
  spec.orders.push_back(rng.between(2, max_order));
  const int blocks = rng.between(1, max_blocks);
  int vertices = spec.orders[0];
  for (int i = 1; i < blocks; ++i) {
    const int parent = rng.between(0, i - 1);
    const int order = rng.between(2, spec.orders[static_cast<std::size_t>(parent)]);
    if (vertices + order - 1 > max_vertices) break;
    spec.parents.push_back(parent);
    spec.orders.push_back(order);
    vertices += order - 1;
  }
  if (spec.orders.size() == 1) spec.parents.clear();
  return spec;
}

// Random block spec without the domination constraint; attachment vertices are
// also random so several blocks may share one cut vertex.
inline BlockSpec random_block_spec(Rng& rng, int max_blocks, int max_order, int max_vertices = kMaxVertices) {
  BlockSpec spec;
  spec.orders.push_back(rng.between(2, max_order));
  const int blocks = rng.between(1, max_blocks);
  int vertices = spec.orders[0];
  for (int i = 1; i < blocks; ++i) {
    const int order = rng.between(2, max_order);
    if (vertices + order - 1 > max_vertices) break;
    const int parent = rng.between(0, i - 1);
    spec.parents.push_back(parent);
    spec.attachments.push_back(rng.between(0, spec.orders[static_cast<std::size_t>(parent)] - 1));
    spec.orders.push_back(order);
    vertices += order - 1;
  }
  if (spec.orders.size() == 1) spec.parents.clear();
  return spec;
}

// Disjoint union of `num_cliques` cliques with orders uniform in [min_order, max_order].
inline Graph random_clique_forest(int num_cliques, int min_order, int max_order, std::uint64_t seed) {
  if (num_cliques < 0) throw ContractViolation("clique count must be >= 0");
  if (min_order < 1 || max_order < min_order)
    throw ContractViolation("clique orders need 1 <= min_order <= max_order");
  Rng rng(seed);
  std::vector<int> orders;
  int total = 0;
  for (int i = 0; i < num_cliques; ++i) {
    orders.push_back(rng.between(min_order, max_order));
    total += orders.back();
  }
  if (total > kMaxVertices) throw ContractViolation("clique forest needs " + std::to_string(total) + " > 64 vertices");
  GraphBuilder b(total);
  Vertex first = 0;
  for (int order : orders) {
    b.add_clique(full_mask(first + order) & ~full_mask(first));
    first += order;
  }
  return b.build();
}

}  // namespace locturan
