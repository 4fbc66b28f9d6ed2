#pragma once

#include "locturan/blocks.hpp"
#include "locturan/graph.hpp"
#include "locturan/weights.hpp"

namespace locturan {

// Spanning cycle, n >= 3. Reads the anchored subset table at the full set.
inline bool is_hamiltonian(const Graph& g, int dp_limit = kDefaultDpLimit) {
  detail::check_dp_limit(g, dp_limit);
  if (g.order() < 3) return false;
  const auto anchored = detail::subset_path_table(g, true);
  return (anchored[g.vertices()] & g.neighbors(0)) != 0;
}

// H_c = {v : c(v) >= s}
inline VertexMask heavy_cycle_set(const Graph& g, int s, const VertexWeights& w) {
  VertexMask h = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (w.c[static_cast<std::size_t>(v)] >= s) h |= bit(v);
  return h;
}

// H_p = {v : p(v) >= s - 1}
inline VertexMask heavy_path_set(const Graph& g, int s, const VertexWeights& w) {
  VertexMask h = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (w.p[static_cast<std::size_t>(v)] >= s - 1) h |= bit(v);
  return h;
}

// The structural side of each equality statement.
// Theorem 1, s = 1: every vertex lies on an n-cycle. For n >= 3 that is
// Hamiltonicity; on two vertices both sides of the bound are 2 and c = 2 = n
// by convention, so the predicate holds there too.
// Theorem 1, s >= 2: G[H_c] is a parent-dominated block graph.
// Theorem 2, s = 1: always. s >= 2: every component of G[H_p] is a clique.
inline bool extremal_predicate(const Graph& g, int s, int theorem, const VertexWeights& w) {
  if (s < 1) throw ContractViolation("s must be >= 1");
  if (theorem == 1) {
    if (s == 1) {
      if (g.order() == 1) return false;
      for (int c : w.c)
        if (c != g.order()) return false;
      return true;
    }
    return is_parent_dominated(induced_subgraph(g, heavy_cycle_set(g, s, w)));
  }
  if (theorem == 2) {
    if (s == 1) return true;
    return components_are_cliques(induced_subgraph(g, heavy_path_set(g, s, w)));
  }
  throw ContractViolation("theorem must be 1 or 2");
}

}  // namespace locturan
