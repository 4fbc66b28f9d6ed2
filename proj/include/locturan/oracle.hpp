#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "locturan/bounds.hpp"
#include "locturan/enumerate.hpp"
#include "locturan/generators.hpp"
#include "locturan/parallel.hpp"
#include "locturan/transforms.hpp"

namespace locturan {

struct Violation {
  int theorem = 0;
  int s = 0;
  std::string graph6;
  std::string kind;  // "inequality" or "iff"
  std::string detail;
};

// Totals from running both theorems over every isomorphism class up to n_max.
struct SweepSummary {
  int n_max = 0;
  int s_max = 0;
  std::vector<std::size_t> graphs_per_n;
  std::size_t checks = 0;
  std::size_t skipped = 0;  // out-of-scope cases (theorem 1, n = 1, s = 1)
  std::map<std::tuple<int, int, int>, std::size_t> equalities;  // (theorem, n, s)
  std::vector<Violation> violations;

  std::size_t graphs() const {
    std::size_t total = 0;
    for (std::size_t c : graphs_per_n) total += c;
    return total;
  }
  bool ok() const { return violations.empty(); }
};

namespace detail {

struct GraphVerdicts {
  std::vector<BoundReport> reports;  // theorem-major, then s = 1..s_max
};

inline GraphVerdicts verdicts_for(const Graph& g, int s_max) {
  GraphVerdicts out;
  const VertexWeights w = compute_weights(g);
  for (int theorem = 1; theorem <= 2; ++theorem)
    for (int s = 1; s <= s_max; ++s) out.reports.push_back(check_theorem(g, s, theorem, w));
  return out;
}

inline void tally(SweepSummary& summary, int n, const GraphVerdicts& v) {
  for (const BoundReport& r : v.reports) {
    if (!r.in_scope) {
      ++summary.skipped;
      continue;
    }
    ++summary.checks;
    if (r.equality) ++summary.equalities[{r.theorem, n, r.s}];
    if (!r.holds())
      summary.violations.push_back({r.theorem, r.s, r.graph6, "inequality",
                                    "N = " + std::to_string(r.lhs) + " > bound " + to_string(r.rhs)});
    else if (!r.consistent)
      summary.violations.push_back({r.theorem, r.s, r.graph6, "iff",
                                    std::string("equality ") + (r.equality ? "true" : "false") + ", predicate " +
                                        (r.extremal ? "true" : "false")});
  }
}

}  // namespace detail

// Both theorems, every s <= s_max, every graph on at most n_max vertices.
// With stop_on_violation the sweep ends after the first order that produced a
// violation.
inline SweepSummary exhaustive_verify(int n_max, int s_max, bool stop_on_violation = true, unsigned threads = 0) {
  if (n_max > kMaxEnumerationOrder)
    throw ResourceLimit("exhaustive_verify is limited to n <= 8, got " + std::to_string(n_max));
  check_s(s_max);
  SweepSummary summary;
  summary.n_max = n_max;
  summary.s_max = s_max;
  for (int n = 0; n <= n_max; ++n) {
    const std::vector<Graph> graphs = enumerate_graphs(n);
    summary.graphs_per_n.push_back(graphs.size());
    const auto verdicts = parallel_map<detail::GraphVerdicts>(
        graphs.size(), [&](std::size_t i) { return detail::verdicts_for(graphs[i], s_max); }, threads);
    for (const auto& v : verdicts) detail::tally(summary, n, v);
    if (stop_on_violation && !summary.ok()) break;
  }
  return summary;
}

inline nlohmann::ordered_json to_json(const SweepSummary& s) {
  nlohmann::ordered_json j;
  j["n_max"] = s.n_max;
  j["s_max"] = s.s_max;
  j["graphs"] = s.graphs();
  j["graphs_per_n"] = s.graphs_per_n;
  j["checks"] = s.checks;
  j["skipped_out_of_scope"] = s.skipped;
  nlohmann::ordered_json eq = nlohmann::ordered_json::array();
  for (const auto& [key, count] : s.equalities) {
    const auto [theorem, n, sv] = key;
    eq.push_back({{"theorem", theorem}, {"n", n}, {"s", sv}, {"count", count}});
  }
  j["equalities"] = eq;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const Violation& v : s.violations)
    vs.push_back({{"theorem", v.theorem}, {"s", v.s}, {"graph6", v.graph6}, {"kind", v.kind}, {"detail", v.detail}});
  j["violations"] = vs.size();
  j["witnesses"] = vs;
  return j;
}

struct CrosscheckSummary {
  int n = 0;
  std::size_t labeled = 0;
  std::size_t classes_seen = 0;
  std::size_t classes_expected = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
  SweepSummary sweep;

  bool ok() const { return mismatches == 0 && classes_seen == classes_expected && sweep.ok(); }
};

// Runs the theorem checks on every labelled graph on n vertices and compares
// each verdict with the verdict of its class representative from the
// enumerator.
inline CrosscheckSummary labeled_crosscheck(int n, int s_max, unsigned threads = 0) {
  if (n < 0 || n > 5) throw ResourceLimit("labeled_crosscheck is limited to n <= 5");
  CrosscheckSummary out;
  out.n = n;
  out.sweep.n_max = n;
  out.sweep.s_max = s_max;

  const std::vector<Graph> reps = enumerate_graphs(n);
  out.classes_expected = reps.size();
  std::unordered_map<std::uint64_t, detail::GraphVerdicts> by_class;
  for (const Graph& r : reps) by_class.emplace(canonical_code(r), detail::verdicts_for(r, s_max));

  const std::vector<Graph> all = labeled_graphs(n);
  out.labeled = all.size();
  out.sweep.graphs_per_n.assign(static_cast<std::size_t>(n) + 1, 0);
  out.sweep.graphs_per_n.back() = all.size();
  const auto verdicts = parallel_map<detail::GraphVerdicts>(
      all.size(), [&](std::size_t i) { return detail::verdicts_for(all[i], s_max); }, threads);

  std::unordered_map<std::uint64_t, bool> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    detail::tally(out.sweep, n, verdicts[i]);
    const std::uint64_t code = canonical_code(all[i]);
    seen[code] = true;
    auto it = by_class.find(code);
    bool same = it != by_class.end();
    if (same) {
      const auto& a = verdicts[i].reports;
      const auto& b = it->second.reports;
      for (std::size_t k = 0; k < a.size() && same; ++k)
        same = a[k].lhs == b[k].lhs && a[k].rhs == b[k].rhs && a[k].equality == b[k].equality &&
               a[k].extremal == b[k].extremal && a[k].in_scope == b[k].in_scope;
    }
    if (!same && out.mismatches++ == 0) out.first_mismatch = write_graph6(all[i]);
  }
  out.classes_seen = seen.size();
  return out;
}

inline nlohmann::ordered_json to_json(const CrosscheckSummary& c) {
  return {{"n", c.n},
          {"labeled", c.labeled},
          {"classes_seen", c.classes_seen},
          {"classes_expected", c.classes_expected},
          {"mismatches", c.mismatches},
          {"first_mismatch", c.first_mismatch},
          {"violations", c.sweep.violations.size()}};
}

// Exact parameter grids for the binomial identities and inequalities used by
// the cycle-bound proof.
//  convolution: sum_t C(S,t) C(d-S,s-t-1)/(s-t) = (C(d+1,s) - C(S,s))/(d-S+1)
//  usefull:     C(x-2,y)/(x-3) <= C(x-1,y)/(x-1), equal iff y = 2 or x-1 < y
//  monotone:    C(x,s)/(x-1) non-decreasing in x >= 2
//  enough2:     (C(d+1,s) - C(S,s))/(d-S+1) <= C(S+d,s)/(S+d-1) for d >= S >= 1,
//               equal iff s = 2, S = 1, or S+d < s (both sides 0)
struct GridRanges {
  int conv_d_max = 12;
  int conv_s_max = 8;
  int use_x_min = 4;
  int use_x_max = 40;
  int use_y_min = 2;
  int use_y_max = 12;
  int mono_x_max = 40;
  int mono_s_min = 2;
  int mono_s_max = 8;
  int e2_max = 15;
  int e2_s_min = 2;
  int e2_s_max = 8;
};

inline CheckReport identity_grid(const GridRanges& r = {}) {
  CheckReport report;
  auto cell = [](std::initializer_list<std::pair<const char*, int>> params) {
    std::string out;
    for (auto [name, value] : params) out += std::string(out.empty() ? "" : " ") + name + "=" + std::to_string(value);
    return out;
  };

  for (int d = 0; d <= r.conv_d_max; ++d)
    for (int sz = 0; sz <= d; ++sz)
      for (int s = 1; s <= r.conv_s_max; ++s) {
        const bool ok = contribution_upper_bound_sum(d, sz, s) == contribution_upper_bound_closed(d, sz, s);
        report.record("convolution", ok, [&] { return cell({{"d", d}, {"S", sz}, {"s", s}}); });
      }

  for (int x = r.use_x_min; x <= r.use_x_max; ++x)
    for (int y = r.use_y_min; y <= r.use_y_max; ++y) {
      const Rational lhs(binom(x - 2, y), x - 3);
      const Rational rhs(binom(x - 1, y), x - 1);
      const bool expect_equal = y == 2 || x - 1 < y;
      report.record("usefull", lhs <= rhs && (lhs == rhs) == expect_equal, [&] {
        return cell({{"x", x}, {"y", y}}) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
      });
    }

  for (int s = r.mono_s_min; s <= r.mono_s_max; ++s)
    for (int x = 2; x < r.mono_x_max; ++x) {
      const bool ok = cycle_term(x, s) <= cycle_term(x + 1, s);
      report.record("monotone", ok, [&] { return cell({{"x", x}, {"s", s}}); });
    }

  for (int s = r.e2_s_min; s <= r.e2_s_max; ++s)
    for (int d = 1; d <= r.e2_max; ++d)
      for (int sz = 1; sz <= d; ++sz) {
        const Rational lhs = contribution_upper_bound_closed(d, sz, s);
        const Rational rhs = cycle_term(sz + d, s);
        const bool expect_equal = s == 2 || sz == 1 || sz + d < s;
        report.record("enough2", lhs <= rhs && (lhs == rhs) == expect_equal, [&] {
          return cell({{"d", d}, {"S", sz}, {"s", s}}) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
        });
      }
  return report;
}

// Proof steps of the path bound.
//  endpoint_degree: connected graphs on at most n_max vertices whose longest
//    path has k >= 2 edges and which have no (k+1)-cycle; on every longest
//    path the smaller end degree is at most floor(k/2).
//  ratio_chain: s < 2^(s-1) < prod_{x=0}^{s-2} (k-x)/(K-x), K = floor(k/2),
//    for s in [3,8], k in [2s,40]; and C(K,s-1) <= C(k,s-1)/s.
inline CheckReport path_proof_claims(int n_max, int ratio_s_max = 8, int ratio_k_max = 40) {
  if (n_max > kMaxEnumerationOrder) throw ResourceLimit("path_proof_claims is limited to n <= 8");
  CheckReport report;
  report["endpoint_degree"];
  for (int n = 1; n <= n_max; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      const VertexWeights w = compute_weights(g);
      const int k = w.max_path();
      if (k < 2 || w.circumference >= k + 1) continue;
      std::vector<Vertex> path;
      VertexMask used = 0;
      auto dfs = [&](auto&& self, Vertex u) -> void {
        if (static_cast<int>(path.size()) == k + 1) {
          const int low = std::min(g.degree(path.front()), g.degree(path.back()));
          report.record("endpoint_degree", low <= k / 2, [&] {
            return write_graph6(g) + " path " + path_to_string(path) + " k=" + std::to_string(k);
          });
          return;
        }
        for_each_vertex(g.neighbors(u) & ~used, [&](Vertex x) {
          path.push_back(x);
          used |= bit(x);
          self(self, x);
          used &= ~bit(x);
          path.pop_back();
        });
      };
      for (Vertex v = 0; v < n; ++v) {
        path = {v};
        used = bit(v);
        dfs(dfs, v);
      }
    }
  }

  for (int s = 3; s <= ratio_s_max; ++s)
    for (int k = 2 * s; k <= ratio_k_max; ++k) {
      const int big_k = k / 2;
      Rational product = 1;
      for (int x = 0; x <= s - 2; ++x) product *= Rational(k - x, big_k - x);
      const BigInt power = BigInt(1) << (s - 1);
      report.record("ratio_chain", s < power && Rational(power) < product, [&] {
        return "s=" + std::to_string(s) + " k=" + std::to_string(k) + " product=" + to_string(product);
      });
      report.record("binomial_ratio", Rational(binom(big_k, s - 1)) <= Rational(binom(k, s - 1), s),
                    [&] { return "s=" + std::to_string(s) + " k=" + std::to_string(k); });
    }
  return report;
}

// Closure lemmas from every start vertex (each with its lexicographically
// first longest path), and the peeling checks for s = 2..4 from the lowest
// maximum-weight vertex.
inline CheckReport transform_lemmas(const Graph& g) {
  CheckReport report;
  const VertexWeights w = compute_weights(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    const TransformClosure tc = transform_closure(g, longest_path_from(g, v), w.c);
    CheckReport one = verify_closure_lemmas(g, tc, w);
    for (auto& r : one.checks)
      if (!r.pass) r.witness = write_graph6(g) + " " + r.witness;
    report.merge(one);
  }
  const PeelTrace trace = peel(g);
  for (const PeelStage& st : trace.stages) {
    CheckReport one = verify_closure_lemmas(st.graph, st.closure, st.weights);
    for (auto& r : one.checks)
      if (!r.pass) r.witness = write_graph6(g) + " (peel stage graph " + write_graph6(st.graph) + ") " + r.witness;
    report.merge(one);
  }
  for (int s = 2; s <= 4; ++s) {
    PeelReport pr = verify_peel_decomposition(g, trace, s);
    for (auto& r : pr.checks.checks)
      if (!r.pass) r.witness = write_graph6(g) + " s=" + std::to_string(s) + " " + r.witness;
    report.merge(pr.checks);
  }
  return report;
}

// transform_lemmas over all graphs with at most n_max vertices, then
// random_count random connected graphs with 2..random_n_max vertices.
inline CheckReport transform_lemma_suite(int n_max, std::size_t random_count, int random_n_max, std::uint64_t seed,
                                         unsigned threads = 0) {
  std::vector<Graph> graphs;
  for (int n = 0; n <= n_max; ++n)
    for (Graph& g : enumerate_graphs(n)) graphs.push_back(std::move(g));
  Rng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    const int n = rng.between(2, random_n_max);
    const double p = 0.15 + 0.7 * rng.unit();
    graphs.push_back(random_connected_graph(n, p, rng.next()));
  }
  const auto reports =
      parallel_map<CheckReport>(graphs.size(), [&](std::size_t i) { return transform_lemmas(graphs[i]); }, threads);
  CheckReport total;
  for (const auto& r : reports) total.merge(r);
  return total;
}

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    j.push_back({{"check", c.name}, {"pass", c.pass}, {"cells", c.checked}, {"witness", c.witness}});
  return j;
}

}  // namespace locturan
