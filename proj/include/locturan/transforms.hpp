#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "locturan/cliques.hpp"
#include "locturan/graph.hpp"
#include "locturan/report.hpp"
#include "locturan/weights.hpp"

namespace locturan {

// v0 v1 ... vk, a simple path read from its designated start v0.
using PathSeq = std::vector<Vertex>;

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

inline std::string path_to_string(const PathSeq& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + "]";
}

inline void check_path(const Graph& g, const PathSeq& p) {
  if (p.empty()) throw ContractViolation("path is empty");
  VertexMask seen = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vertex v = p[i];
    if (v < 0 || v >= g.order()) throw ContractViolation("path vertex " + std::to_string(v) + " not in graph");
    if (contains(seen, v)) throw ContractViolation("path repeats vertex " + std::to_string(v));
    if (i > 0 && !g.adjacent(p[i - 1], v))
      throw ContractViolation("path step " + std::to_string(p[i - 1]) + "-" + std::to_string(v) + " is not an edge");
    seen |= bit(v);
  }
}

namespace detail {

// Calls f(j) for each rotation index: v_j adjacent to the terminal, j <= k-2.
template <class F>
void for_each_rotation(const Graph& g, const Vertex* p, std::size_t len, F&& f) {
  if (len < 3) return;
  const Vertex terminal = p[len - 1];
  const VertexMask nbrs = g.neighbors(terminal);
  for (std::size_t j = 0; j + 2 < len; ++j)
    if (contains(nbrs, p[j])) f(j);
}

// v0..vj vk v(k-1)..v(j+1)
inline void rotate_into(const Vertex* p, std::size_t len, std::size_t j, Vertex* out) {
  std::copy(p, p + j + 1, out);
  std::reverse_copy(p + j + 1, p + len, out + j + 1);
}

}  // namespace detail

// All simple transforms of P, in ascending rotation index.
inline std::vector<PathSeq> simple_transforms(const Graph& g, const PathSeq& p) {
  check_path(g, p);
  std::vector<PathSeq> out;
  detail::for_each_rotation(g, p.data(), p.size(), [&](std::size_t j) {
    PathSeq q(p.size());
    detail::rotate_into(p.data(), p.size(), j, q.data());
    out.push_back(std::move(q));
  });
  return out;
}

// Every path reachable from P by simple transforms, discovered breadth-first
// and stored back to back (stride = |P|). L is the set of terminals seen,
// never containing the start.
struct TransformClosure {
  Vertex start = -1;
  PathSeq base;
  VertexMask terminals = 0;
  std::map<Vertex, PathSeq> representative;
  std::map<Vertex, Vertex> pivot;  // -1 when c(v)-1 exceeds the path length
  std::map<Vertex, VertexMask> s_sets;
  std::vector<Vertex> flat;

  std::size_t stride() const noexcept { return base.size(); }
  std::size_t path_count() const noexcept { return base.empty() ? 0 : flat.size() / base.size(); }
  PathSeq path(std::size_t i) const {
    return PathSeq(flat.begin() + static_cast<long>(i * stride()), flat.begin() + static_cast<long>((i + 1) * stride()));
  }
  int length() const noexcept { return static_cast<int>(base.size()) - 1; }
};

namespace detail {

inline void check_longest(const Graph& g, const PathSeq& p) {
  if (g.order() > kDefaultDpLimit) return;
  const std::size_t best = longest_path_from(g, p.front()).size();
  if (best != p.size())
    throw ContractViolation("path " + path_to_string(p) + " is not a longest path from " + std::to_string(p.front()) +
                            " (longest has " + std::to_string(best - 1) + " edges)");
}

}  // namespace detail

// c holds the cycle weights of g, used for pivots.
inline TransformClosure transform_closure(const Graph& g, const PathSeq& p, const std::vector<int>& c,
                                          std::size_t cap = kDefaultClosureCap) {
  check_path(g, p);
  detail::check_longest(g, p);
  if (c.size() != static_cast<std::size_t>(g.order())) throw ContractViolation("weights do not match the graph");

  TransformClosure tc;
  tc.start = p.front();
  tc.base = p;
  const std::size_t len = p.size();
  tc.flat = p;

  auto hash = [&](std::size_t i) {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(tc.flat.data() + i * len), len * sizeof(Vertex)));
  };
  auto equal = [&](std::size_t a, std::size_t b) {
    return std::equal(tc.flat.begin() + static_cast<long>(a * len), tc.flat.begin() + static_cast<long>((a + 1) * len),
                      tc.flat.begin() + static_cast<long>(b * len));
  };
  std::unordered_set<std::size_t, decltype(hash), decltype(equal)> seen(64, hash, equal);
  seen.insert(0);

  std::vector<Vertex> scratch(len);
  for (std::size_t head = 0; head < tc.path_count(); ++head) {
    std::vector<std::size_t> rotations;
    detail::for_each_rotation(g, tc.flat.data() + head * len, len, [&](std::size_t j) { rotations.push_back(j); });
    for (std::size_t j : rotations) {
      detail::rotate_into(tc.flat.data() + head * len, len, j, scratch.data());
      tc.flat.insert(tc.flat.end(), scratch.begin(), scratch.end());
      if (!seen.insert(tc.path_count() - 1).second) {
        tc.flat.resize(tc.flat.size() - len);
        continue;
      }
      if (tc.path_count() > cap)
        throw BudgetExceeded("transform closure exceeded " + std::to_string(cap) + " paths from " +
                             path_to_string(p));
    }
  }

  for (std::size_t i = 0; i < tc.path_count(); ++i) {
    const Vertex v = tc.flat[(i + 1) * len - 1];
    if (v == tc.start || contains(tc.terminals, v)) continue;
    tc.terminals |= bit(v);
    tc.representative.emplace(v, tc.path(i));
  }
  for (const auto& [v, q] : tc.representative) {
    const long at = static_cast<long>(len) - c[static_cast<std::size_t>(v)];
    tc.pivot.emplace(v, at >= 0 ? q[static_cast<std::size_t>(at)] : -1);
    tc.s_sets.emplace(v, g.neighbors(v) & ~tc.terminals);
  }
  return tc;
}

inline TransformClosure transform_closure(const Graph& g, const PathSeq& p, std::size_t cap = kDefaultClosureCap) {
  return transform_closure(g, p, weights_for(g).c, cap);
}

// Checks the closure lemmas on every path of the closure (not only the
// representatives): good paths, L disjoint from Front*, N(v) inside Back*,
// position invariance of the prefix, and the |S_v| and d(v) bounds.
inline CheckReport verify_closure_lemmas(const Graph& g, const TransformClosure& tc, const std::vector<int>& c) {
  CheckReport report;
  for (const char* name : {"good_path", "front_disjoint", "back_star", "position_invariance", "s_bound", "degree_bound"})
    report[name];
  if (tc.terminals == 0) return report;

  const int k = tc.length();
  const int l_size = popcount(tc.terminals);
  int cx = kMaxVertices + 1;
  for_each_vertex(tc.terminals, [&](Vertex v) { cx = std::min(cx, c[static_cast<std::size_t>(v)]); });

  for_each_vertex(tc.terminals, [&](Vertex v) {
    const int cv = c[static_cast<std::size_t>(v)];
    const int s_size = popcount(tc.s_sets.at(v));
    report.record("s_bound", s_size <= cv - l_size, [&] {
      return "v=" + std::to_string(v) + " |S_v|=" + std::to_string(s_size) + " c(v)=" + std::to_string(cv) +
             " |L|=" + std::to_string(l_size);
    });
    report.record("degree_bound", g.degree(v) <= l_size, [&] {
      return "v=" + std::to_string(v) + " d(v)=" + std::to_string(g.degree(v)) + " |L|=" + std::to_string(l_size);
    });
  });

  const std::size_t len = tc.stride();
  for (std::size_t i = 0; i < tc.path_count(); ++i) {
    const Vertex* q = tc.flat.data() + i * len;
    const Vertex v = q[k];
    if (v == tc.start) continue;
    const int cv = c[static_cast<std::size_t>(v)];
    auto where = [&] { return "path " + path_to_string(tc.path(i)) + " v=" + std::to_string(v); };

    bool good = true;
    for (int idx = 0; idx <= k - cx; ++idx) good = good && !g.adjacent(v, q[idx]);
    report.record("good_path", good, where);

    const int pivot = k - (cv - 1);
    VertexMask front_star = 0;
    VertexMask back_star = 0;
    for (int idx = 0; idx <= k; ++idx) {
      if (idx <= pivot) front_star |= bit(q[idx]);
      if (idx >= pivot) back_star |= bit(q[idx]);
    }
    report.record("front_disjoint", pivot >= 0 && (front_star & tc.terminals) == 0, where);
    report.record("back_star", pivot >= 0 && (g.neighbors(v) & ~back_star) == 0, where);

    bool same = true;
    for (int idx = 0; idx <= k + 1 - cx; ++idx) same = same && q[idx] == tc.base[static_cast<std::size_t>(idx)];
    report.record("position_invariance", same, where);
  }
  return report;
}

inline CheckReport verify_closure_lemmas(const Graph& g, const TransformClosure& tc, const VertexWeights& w) {
  return verify_closure_lemmas(g, tc, w.c);
}

// One stage of the peeling algorithm. graph is G_i relabelled to 0..m-1 in
// increasing original id; path and terminals use original ids, closure and
// weights use local ids.
struct PeelStage {
  VertexMask alive = 0;
  Graph graph;
  std::vector<Vertex> ids;
  Vertex x = -1;
  PathSeq path;
  VertexMask terminals = 0;
  VertexWeights weights;
  TransformClosure closure;

  Vertex local(Vertex original) const { return popcount(alive & (bit(original) - 1)); }
  int c(Vertex original) const { return weights.c[static_cast<std::size_t>(local(original))]; }
};

struct PeelTrace {
  Vertex u = -1;
  std::vector<PeelStage> stages;

  // t: index of the last non-empty stage (-1 for the empty graph).
  int iterations() const noexcept { return static_cast<int>(stages.size()) - 1; }
};

// Runs the peeling loop from u, which must have maximum cycle weight.
inline PeelTrace peel(const Graph& g, Vertex u, int dp_limit = kDefaultDpLimit, std::size_t cap = kDefaultClosureCap) {
  PeelTrace trace;
  trace.u = u;
  if (g.order() == 0) return trace;
  if (u < 0 || u >= g.order()) throw ContractViolation("start vertex " + std::to_string(u) + " not in graph");

  VertexMask alive = g.vertices();
  Vertex x = u;
  while (alive != 0) {
    PeelStage st;
    st.alive = alive;
    st.graph = induced_subgraph(g, alive, &st.ids);
    st.weights = compute_weights(st.graph, dp_limit);
    if (trace.stages.empty()) {
      if (st.weights.c[static_cast<std::size_t>(u)] != st.weights.circumference)
        throw ContractViolation("peel start " + std::to_string(u) + " has c = " +
                                std::to_string(st.weights.c[static_cast<std::size_t>(u)]) +
                                " below the circumference " + std::to_string(st.weights.circumference));
    } else if (!contains(alive, x)) {
      const auto& c = st.weights.c;
      const auto best = std::max_element(c.begin(), c.end());
      x = st.ids[static_cast<std::size_t>(best - c.begin())];
    }
    st.x = x;
    const PathSeq local_path = longest_path_from(st.graph, st.local(x), dp_limit);
    st.closure = transform_closure(st.graph, local_path, st.weights.c, cap);
    for (Vertex v : local_path) st.path.push_back(st.ids[static_cast<std::size_t>(v)]);
    st.terminals = lift_mask(st.closure.terminals, st.ids);

    const VertexMask rest = alive & ~st.terminals;
    const Graph next = induced_subgraph(g, rest);
    std::vector<Vertex> next_ids = to_vector(rest);
    VertexMask isolated = 0;
    for (Vertex v = 0; v < next.order(); ++v)
      if (next.degree(v) == 0) isolated |= bit(next_ids[static_cast<std::size_t>(v)]);
    alive = rest & ~isolated;
    trace.stages.push_back(std::move(st));
  }
  return trace;
}

// Lowest-id vertex of maximum cycle weight, -1 for the empty graph.
inline Vertex default_peel_start(const Graph& g, int dp_limit = kDefaultDpLimit) {
  if (g.order() == 0) return -1;
  const auto c = compute_weights(g, dp_limit).c;
  return static_cast<Vertex>(std::max_element(c.begin(), c.end()) - c.begin());
}

inline PeelTrace peel(const Graph& g) { return peel(g, default_peel_start(g)); }

// Exact checks on a peel trace for clique size s >= 2: the decomposition
// N(G,K_s) = sum N(G_i,K_s,L_i), c_i <= c, the L_i pairwise disjoint and
// avoiding u, G_{i+1} built from G_i as listed, the stage bound and the
// per-vertex chain N_v <= contribution bound <= C(c_i,s)/(c_i-1).
struct PeelReport {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> stage_counts;
  CheckReport checks;

  bool ok() const { return checks.ok(); }
};

inline PeelReport verify_peel_decomposition(const Graph& g, const PeelTrace& trace, int s) {
  if (s < 2) throw ContractViolation("peel decomposition is stated for s >= 2");
  PeelReport report;
  for (const char* name : {"decomposition", "construction", "weight_monotone", "disjoint", "u_excluded", "stage_bound",
                           "vertex_bound"})
    report.checks[name];
  report.total = count_cliques(g, s);
  if (g.order() == 0) {
    report.checks.record("decomposition", trace.stages.empty(), [] { return "stages on empty graph"; });
    return report;
  }
  const std::vector<int> c = compute_weights(g).c;

  std::uint64_t sum = 0;
  VertexMask used = 0;
  VertexMask expected_alive = g.vertices();
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const PeelStage& st = trace.stages[i];
    const std::string at = "stage " + std::to_string(i);

    report.checks.record("construction", st.alive == expected_alive, [&] { return at + " has the wrong vertex set"; });
    const VertexMask rest = st.alive & ~st.terminals;
    VertexMask keep = 0;
    for_each_vertex(rest, [&](Vertex v) {
      if ((g.neighbors(v) & rest) != 0) keep |= bit(v);
    });
    expected_alive = keep;

    report.checks.record("disjoint", (used & st.terminals) == 0, [&] { return at + " reuses a removed terminal"; });
    used |= st.terminals;
    report.checks.record("u_excluded", !contains(st.terminals, trace.u), [&] { return at + " contains u"; });

    for_each_vertex(st.alive, [&](Vertex v) {
      report.checks.record("weight_monotone", st.c(v) <= c[static_cast<std::size_t>(v)], [&] {
        return at + " v=" + std::to_string(v) + " c_i=" + std::to_string(st.c(v)) + " c=" +
               std::to_string(c[static_cast<std::size_t>(v)]);
      });
    });

    const VertexMask local_l = st.closure.terminals;
    const std::uint64_t touching = count_cliques_touching(st.graph, s, local_l);
    report.stage_counts.push_back(touching);
    sum += touching;

    Rational stage_bound = 0;
    for_each_vertex(local_l, [&](Vertex v) { stage_bound += cycle_term(st.weights.c[static_cast<std::size_t>(v)], s); });
    report.checks.record("stage_bound", Rational(touching) <= stage_bound, [&] {
      return at + " N=" + std::to_string(touching) + " bound=" + to_string(stage_bound);
    });

    const ContributionTable table = contribution_table(st.graph, s, local_l);
    report.checks.record("stage_bound", table.total() == Rational(touching),
                         [&] { return at + " shares do not sum to the touching count"; });
    for (const auto& [v, share] : table.share) {
      const int d = st.graph.degree(v);
      const int s_size = popcount(st.graph.neighbors(v) & ~local_l);
      const Rational mid = contribution_upper_bound(d, s_size, s);
      const Rational top = cycle_term(st.weights.c[static_cast<std::size_t>(v)], s);
      report.checks.record("vertex_bound", share <= mid && mid <= top, [&] {
        return at + " v=" + std::to_string(st.ids[static_cast<std::size_t>(v)]) + " N_v=" + to_string(share) +
               " bound=" + to_string(mid) + " term=" + to_string(top);
      });
    }
  }
  report.checks.record("construction", expected_alive == 0, [] { return "trace stops before the graph is empty"; });
  report.checks.record("decomposition", sum == report.total, [&] {
    return "sum " + std::to_string(sum) + " != N(G,K_s) " + std::to_string(report.total);
  });
  return report;
}

}  // namespace locturan
