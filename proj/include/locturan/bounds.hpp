#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "json.hpp"
#include "locturan/cliques.hpp"
#include "locturan/extremal.hpp"
#include "locturan/io.hpp"
#include "locturan/rational.hpp"
#include "locturan/report.hpp"
#include "locturan/weights.hpp"

namespace locturan {

inline void check_s(int s) {
  if (s < 1) throw ContractViolation("s must be >= 1, got " + std::to_string(s));
}

// Sum over v of C(c(v),s)/(c(v)-1), minus one such term at the circumference.
// 0 for the empty graph.
inline Rational thm1_rhs(const Graph& g, int s, const VertexWeights& w) {
  check_s(s);
  if (g.order() == 0) return 0;
  Rational sum = 0;
  for (int c : w.c) sum += cycle_term(c, s);
  return sum - cycle_term(w.circumference, s);
}

// (1/s) sum_v C(p(v), s-1), cross-checked against sum_v C(p(v)+1, s)/(p(v)+1).
inline Rational thm2_rhs(const Graph& g, int s, const VertexWeights& w) {
  check_s(s);
  BigInt sum = 0;
  Rational alt = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int p = w.p[static_cast<std::size_t>(v)];
    sum += binom(p, s - 1);
    alt += Rational(binom(p + 1, s), p + 1);
  }
  const Rational rhs(sum, s);
  if (rhs != alt) throw ContractViolation("path bound closed forms disagree: " + to_string(rhs) + " vs " + to_string(alt));
  return rhs;
}

struct BoundReport {
  int theorem = 1;
  int s = 1;
  std::string graph6;
  std::uint64_t lhs = 0;
  Rational rhs = 0;
  bool equality = false;
  bool extremal = false;
  bool consistent = false;
  // false only for the one-vertex graph under theorem 1 with s = 1, where the
  // subtracted term empties the sum.
  bool in_scope = true;

  Rational gap() const { return rhs - Rational(lhs); }
  bool holds() const { return !in_scope || gap() >= 0; }
  bool passed() const { return !in_scope || (holds() && consistent); }
};

inline BoundReport check_theorem(const Graph& g, int s, int theorem, const VertexWeights& w) {
  check_s(s);
  if (theorem != 1 && theorem != 2) throw ContractViolation("theorem must be 1 or 2");
  BoundReport r;
  r.theorem = theorem;
  r.s = s;
  r.graph6 = write_graph6(g);
  r.lhs = count_cliques(g, s);
  r.rhs = theorem == 1 ? thm1_rhs(g, s, w) : thm2_rhs(g, s, w);
  r.equality = r.rhs == Rational(r.lhs);
  r.extremal = extremal_predicate(g, s, theorem, w);
  r.in_scope = !(theorem == 1 && s == 1 && g.order() == 1);
  r.consistent = r.equality == r.extremal;
  return r;
}

inline BoundReport check_theorem(const Graph& g, int s, int theorem, int dp_limit = kDefaultDpLimit) {
  return check_theorem(g, s, theorem, weights_for(g, dp_limit));
}

namespace detail {

inline nlohmann::ordered_json json_number(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

}  // namespace detail

// Integers that do not fit in 64 bits are written as decimal strings.
inline nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["s"] = r.s;
  j["graph6"] = r.graph6;
  j["lhs"] = r.lhs;
  j["rhs_num"] = detail::json_number(numerator_of(r.rhs));
  j["rhs_den"] = detail::json_number(denominator_of(r.rhs));
  j["equality"] = r.equality;
  j["extremal"] = r.extremal;
  j["consistent"] = r.consistent;
  j["in_scope"] = r.in_scope;
  return j;
}

// Dropping the light vertices (outside H_c or H_p) keeps N(G,K_s), keeps the
// weights of every heavy vertex, hence the gap and the equality status.
inline CheckReport reduction_invariance(const Graph& g, int s, int theorem, const VertexWeights& w) {
  check_s(s);
  CheckReport report;
  const VertexMask heavy = theorem == 1 ? heavy_cycle_set(g, s, w) : heavy_path_set(g, s, w);
  std::vector<Vertex> ids;
  const Graph h = induced_subgraph(g, heavy, &ids);
  const VertexWeights wh = weights_for(h);

  const std::string where = write_graph6(g) + " s=" + std::to_string(s) + " theorem " + std::to_string(theorem);
  const std::uint64_t n_g = count_cliques(g, s);
  const std::uint64_t n_h = count_cliques(h, s);
  report.record("clique_count", n_g == n_h, [&] { return where + ": " + std::to_string(n_g) + " vs " + std::to_string(n_h); });

  bool same_weights = true;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto v = static_cast<std::size_t>(ids[i]);
    same_weights = same_weights && (theorem == 1 ? wh.c[i] == w.c[v] : wh.p[i] == w.p[v]);
  }
  report.record("weights_kept", same_weights, [&] { return where; });

  const BoundReport full = check_theorem(g, s, theorem, w);
  const BoundReport reduced = check_theorem(h, s, theorem, wh);
  report.record("gap_kept", full.gap() == reduced.gap(),
                [&] { return where + ": " + to_string(full.gap()) + " vs " + to_string(reduced.gap()); });
  report.record("equality_kept", full.equality == reduced.equality, [&] { return where; });
  return report;
}

// Comparison with the global bounds (n-1)/(k-1) C(k,s), k the circumference
// (k >= 3), and (n/k) C(k,s), k = 1 + max p (k >= 2).
struct LuoReport {
  bool cycle_applied = false;
  Rational cycle_local = 0;
  Rational cycle_global = 0;
  bool cycle_tight = false;
  bool cycle_terms_equal = false;

  bool path_applied = false;
  Rational path_local = 0;
  Rational path_global = 0;
  bool path_tight = false;
  bool path_terms_equal = false;

  std::string notice;

  bool dominated() const {
    return (!cycle_applied || cycle_local <= cycle_global) && (!path_applied || path_local <= path_global);
  }
  // Tightness happens exactly when every vertex term equals the largest one.
  bool characterized() const {
    return (!cycle_applied || cycle_tight == cycle_terms_equal) && (!path_applied || path_tight == path_terms_equal);
  }
};

inline LuoReport luo_dominance(const Graph& g, int s, const VertexWeights& w) {
  if (s < 2) throw ContractViolation("luo_dominance needs s >= 2");
  LuoReport r;
  const int n = g.order();

  const int kc = w.circumference;
  if (n > 0 && kc >= 3) {
    r.cycle_applied = true;
    r.cycle_local = thm1_rhs(g, s, w);
    r.cycle_global = Rational(n - 1, kc - 1) * Rational(binom(kc, s));
    r.cycle_tight = r.cycle_local == r.cycle_global;
    const Rational top = cycle_term(kc, s);
    r.cycle_terms_equal = std::all_of(w.c.begin(), w.c.end(), [&](int c) { return cycle_term(c, s) == top; });
  } else {
    r.notice += "cycle comparison skipped (circumference " + std::to_string(kc) + " < 3); ";
  }

  const int kp = n > 0 ? 1 + w.max_path() : 0;
  if (kp >= 2) {
    r.path_applied = true;
    r.path_local = thm2_rhs(g, s, w);
    r.path_global = Rational(n, kp) * Rational(binom(kp, s));
    r.path_tight = r.path_local == r.path_global;
    const Rational top(binom(kp, s), kp);
    r.path_terms_equal =
        std::all_of(w.p.begin(), w.p.end(), [&](int p) { return Rational(binom(p + 1, s), p + 1) == top; });
  } else {
    r.notice += "path comparison skipped (k = " + std::to_string(kp) + " <= 1); ";
  }
  return r;
}

}  // namespace locturan
