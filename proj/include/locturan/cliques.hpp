#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "locturan/blocks.hpp"
#include "locturan/graph.hpp"
#include "locturan/rational.hpp"

namespace locturan {

namespace detail {

// Number of r-cliques inside `cand`. A candidate set that is itself a clique is
// counted in closed form.
inline std::uint64_t cliques_within(const Graph& g, VertexMask cand, int r) {
  if (r == 0) return 1;
  const int size = popcount(cand);
  if (size < r) return 0;
  if (r == 1) return static_cast<std::uint64_t>(size);
  if (induces_clique(g, cand)) return binom_u64(size, r);
  std::uint64_t total = 0;
  while (popcount(cand) >= r) {
    const Vertex v = lowest(cand);
    cand &= cand - 1;
    total += cliques_within(g, cand & g.neighbors(v), r - 1);
  }
  return total;
}

// hist[k] += number of r-cliques inside `cand` with exactly k vertices in `marked`.
inline void cliques_by_marked(const Graph& g, VertexMask cand, int r, VertexMask marked, int already,
                              std::vector<std::uint64_t>& hist) {
  if (r == 0) {
    ++hist[static_cast<std::size_t>(already)];
    return;
  }
  if (popcount(cand) < r) return;
  if (induces_clique(g, cand)) {
    const int in = popcount(cand & marked);
    const int out = popcount(cand & ~marked);
    for (int a = 0; a <= std::min(in, r); ++a)
      hist[static_cast<std::size_t>(already + a)] += binom_u64(in, a) * binom_u64(out, r - a);
    return;
  }
  while (popcount(cand) >= r) {
    const Vertex v = lowest(cand);
    cand &= cand - 1;
    cliques_by_marked(g, cand & g.neighbors(v), r - 1, marked, already + (contains(marked, v) ? 1 : 0), hist);
  }
}

// Repeatedly strips a minimum-degree vertex; the removal order.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
  std::vector<Vertex> order;
  VertexMask rest = g.vertices();
  while (rest != 0) {
    Vertex pick = -1;
    int best = kMaxVertices + 1;
    for_each_vertex(rest, [&](Vertex v) {
      const int d = popcount(g.neighbors(v) & rest);
      if (d < best) {
        best = d;
        pick = v;
      }
    });
    order.push_back(pick);
    rest &= ~bit(pick);
  }
  return order;
}

}  // namespace detail

// N(G, K_s): number of s-vertex complete subgraphs. s = 0 gives 1.
// Each clique is counted from its earliest vertex in degeneracy order.
inline std::uint64_t count_cliques(const Graph& g, int s) {
  if (s < 0) throw ContractViolation("clique size must be >= 0");
  if (s == 0) return 1;
  if (s == 1) return static_cast<std::uint64_t>(g.order());
  std::uint64_t total = 0;
  VertexMask later = g.vertices();
  for (Vertex v : detail::degeneracy_order(g)) {
    later &= ~bit(v);
    total += detail::cliques_within(g, g.neighbors(v) & later, s - 1);
  }
  return total;
}

// N(G, K_s, X): s-cliques with at least one vertex in X. Each clique is charged
// to its lowest-id vertex of X.
inline std::uint64_t count_cliques_touching(const Graph& g, int s, VertexMask x) {
  if (s < 0) throw ContractViolation("clique size must be >= 0");
  x &= g.vertices();
  if (s == 0) return 0;
  std::uint64_t total = 0;
  VertexMask earlier = 0;
  for_each_vertex(x, [&](Vertex v) {
    total += detail::cliques_within(g, g.neighbors(v) & ~earlier, s - 1);
    earlier |= bit(v);
  });
  return total;
}

// Fractional share N_v of each v in L: every s-clique meeting L in k vertices
// gives 1/k to each of those vertices.
struct ContributionTable {
  std::map<Vertex, Rational> share;

  Rational total() const {
    Rational sum = 0;
    for (const auto& [v, q] : share) sum += q;
    return sum;
  }
};

inline ContributionTable contribution_table(const Graph& g, int s, VertexMask l) {
  if (s < 1) throw ContractViolation("contribution_table needs s >= 1");
  l &= g.vertices();
  ContributionTable table;
  for_each_vertex(l, [&](Vertex v) {
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(s) + 1, 0);
    detail::cliques_by_marked(g, g.neighbors(v), s - 1, l, 1, hist);
    Rational share = 0;
    for (std::size_t k = 1; k < hist.size(); ++k)
      if (hist[k] != 0) share += Rational(BigInt(hist[k]), BigInt(k));
    table.share.emplace(v, share);
  });
  return table;
}

// Upper bound on N_v from the degree d of v and the number s_size of its
// neighbours outside L: sum over t of C(s_size,t) C(d-s_size,s-t-1) / (s-t).
inline Rational contribution_upper_bound_sum(int d, int s_size, int s) {
  if (s < 1 || s_size < 0 || s_size > d)
    throw ContractViolation("contribution bound needs 0 <= |S| <= d and s >= 1");
  Rational sum = 0;
  for (int t = 0; t <= s - 1; ++t) sum += Rational(binom(s_size, t) * binom(d - s_size, s - t - 1), s - t);
  return sum;
}

// The same quantity collapsed by Vandermonde's convolution.
inline Rational contribution_upper_bound_closed(int d, int s_size, int s) {
  if (s < 1 || s_size < 0 || s_size > d)
    throw ContractViolation("contribution bound needs 0 <= |S| <= d and s >= 1");
  return Rational(binom(d + 1, s) - binom(s_size, s), d - s_size + 1);
}

// C(c, s) / (c - 1), the per-vertex term of the cycle bound. c >= 2.
inline Rational cycle_term(int c, int s) {
  if (c < 2) throw ContractViolation("cycle weight must be >= 2, got " + std::to_string(c));
  return Rational(binom(c, s), c - 1);
}

inline Rational contribution_upper_bound(int d, int s_size, int s) {
  Rational sum = contribution_upper_bound_sum(d, s_size, s);
  if (sum != contribution_upper_bound_closed(d, s_size, s))
    throw ContractViolation("convolution identity failed at d=" + std::to_string(d) + " |S|=" +
                            std::to_string(s_size) + " s=" + std::to_string(s));
  return sum;
}

}  // namespace locturan
