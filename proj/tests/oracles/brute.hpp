#pragma once

// Independent brute-force references used only by the tests. Nothing here
// shares code paths with the library implementations it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "locturan/graph.hpp"

namespace oracle {

using locturan::Graph;
using locturan::Vertex;

// graph6 through an explicit '0'/'1' string.
inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) out += static_cast<char>(std::stoi(bits.substr(k, 6), nullptr, 2) + 63);
  return out;
}

inline Graph decode_graph6(const std::string& s) {
  const int n = s[0] - 63;
  std::string bits;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const int v = s[k] - 63;
    for (int b = 5; b >= 0; --b) bits += ((v >> b) & 1) ? '1' : '0';
  }
  locturan::GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits[k] == '1') b.add_edge(i, j);
  return b.build();
}

struct Weights {
  std::vector<int> p;
  std::vector<int> c;
};

// Walks every simple path and every simple cycle by DFS.
inline Weights exhaustive_weights(const Graph& g) {
  const int n = g.order();
  Weights w{std::vector<int>(n, 0), std::vector<int>(n, 2)};
  std::vector<Vertex> stack;
  std::vector<bool> on(n, false);

  auto record_path = [&] {
    const int len = static_cast<int>(stack.size()) - 1;
    for (Vertex v : stack) w.p[v] = std::max(w.p[v], len);
  };
  auto dfs_path = [&](auto&& self, Vertex u) -> void {
    record_path();
    for (Vertex x = 0; x < n; ++x) {
      if (!g.adjacent(u, x) || on[x]) continue;
      on[x] = true;
      stack.push_back(x);
      self(self, x);
      stack.pop_back();
      on[x] = false;
    }
  };
  // Cycles are walked from their smallest vertex.
  auto dfs_cycle = [&](auto&& self, Vertex start, Vertex u) -> void {
    for (Vertex x = 0; x < n; ++x) {
      if (!g.adjacent(u, x)) continue;
      if (x == start && stack.size() >= 3) {
        const int len = static_cast<int>(stack.size());
        for (Vertex v : stack) w.c[v] = std::max(w.c[v], len);
      }
      if (x <= start || on[x]) continue;
      on[x] = true;
      stack.push_back(x);
      self(self, start, x);
      stack.pop_back();
      on[x] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = true;
    stack = {s};
    dfs_path(dfs_path, s);
    dfs_cycle(dfs_cycle, s, s);
    on[s] = false;
  }
  return w;
}

// Every simple path starting at v0, as vertex sequences (including {v0}).
inline std::vector<std::vector<Vertex>> paths_from(const Graph& g, Vertex v0) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack{v0};
  std::vector<bool> on(g.order(), false);
  on[v0] = true;
  auto dfs = [&](auto&& self, Vertex u) -> void {
    out.push_back(stack);
    for (Vertex x = 0; x < g.order(); ++x) {
      if (!g.adjacent(u, x) || on[x]) continue;
      on[x] = true;
      stack.push_back(x);
      self(self, x);
      stack.pop_back();
      on[x] = false;
    }
  };
  dfs(dfs, v0);
  return out;
}

inline std::uint64_t count_cliques_subsets(const Graph& g, int s) {
  const int n = g.order();
  if (s == 0) return 1;
  if (s > n) return 0;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - s, pick.end(), 1);
  std::uint64_t count = 0;
  do {
    std::vector<Vertex> chosen;
    for (int v = 0; v < n; ++v)
      if (pick[v]) chosen.push_back(v);
    bool clique = true;
    for (std::size_t a = 0; a < chosen.size() && clique; ++a)
      for (std::size_t b = a + 1; b < chosen.size() && clique; ++b) clique = g.adjacent(chosen[a], chosen[b]);
    if (clique) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

// Smallest column-major adjacency string over all n! relabellings.
inline std::string canonical_string(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every path reachable from p by endpoint rotations, by fixpoint iteration
// over a std::set.
inline std::set<std::vector<Vertex>> rotation_closure(const Graph& g, const std::vector<Vertex>& p) {
  std::set<std::vector<Vertex>> all{p};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& q : std::set<std::vector<Vertex>>(all)) {
      const std::size_t k = q.size() - 1;
      for (std::size_t j = 0; j + 2 <= k; ++j) {
        if (!g.adjacent(q[k], q[j])) continue;
        std::vector<Vertex> r(q.begin(), q.begin() + static_cast<long>(j) + 1);
        for (std::size_t i = k; i > j; --i) r.push_back(q[i]);
        grew |= all.insert(r).second;
      }
    }
  }
  return all;
}

inline std::uint64_t binom(int a, int b) {
  if (b < 0 || a < b) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
