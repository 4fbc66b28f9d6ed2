#include <gtest/gtest.h>

#include <algorithm>

#include "locturan/bounds.hpp"
#include "locturan/enumerate.hpp"
#include "locturan/generators.hpp"
#include "oracles/brute.hpp"

namespace locturan {
namespace {

Graph bowtie() { return generate_pdbg({{3, 3}, {}, {}}); }

// Both right-hand sides from the DFS weights and machine binomials.
Rational oracle_thm1(const Graph& g, int s) {
  const oracle::Weights w = oracle::exhaustive_weights(g);
  if (w.c.empty()) return 0;
  Rational sum = 0;
  for (int c : w.c) sum += Rational(static_cast<long long>(oracle::binom(c, s)), c - 1);
  const int top = *std::max_element(w.c.begin(), w.c.end());
  return sum - Rational(static_cast<long long>(oracle::binom(top, s)), top - 1);
}

Rational oracle_thm2(const Graph& g, int s) {
  Rational sum = 0;
  for (int p : oracle::exhaustive_weights(g).p) sum += Rational(static_cast<long long>(oracle::binom(p + 1, s)), p + 1);
  return sum;
}

TEST(Bounds, RightHandSidesMatchOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (int s = 1; s <= 5; ++s) {
        const VertexWeights w = compute_weights(g);
        ASSERT_EQ(thm1_rhs(g, s, w), oracle_thm1(g, s)) << write_graph6(g) << " s=" << s;
        ASSERT_EQ(thm2_rhs(g, s, w), oracle_thm2(g, s)) << write_graph6(g) << " s=" << s;
      }
}

TEST(Bounds, BowtieCycleBoundIsTight) {
  const BoundReport r = check_theorem(bowtie(), 2, 1);
  EXPECT_EQ(r.lhs, 6U);
  EXPECT_EQ(r.rhs, Rational(6));
  EXPECT_EQ(r.rhs, oracle_thm1(bowtie(), 2));
  EXPECT_TRUE(r.equality);
  EXPECT_TRUE(r.extremal);
  EXPECT_TRUE(r.passed());

  const BoundReport p = check_theorem(bowtie(), 3, 2);
  EXPECT_EQ(p.rhs, oracle_thm2(bowtie(), 3));
  EXPECT_EQ(p.rhs, Rational(10));
  EXPECT_FALSE(p.equality);
}

TEST(Bounds, CyclesEqualOnlyForTriangle) {
  for (int n = 3; n <= 12; ++n) {
    const BoundReport r = check_theorem(cycle_graph(n), 2, 1);
    EXPECT_EQ(r.lhs, static_cast<std::uint64_t>(n));
    EXPECT_EQ(r.rhs, Rational(n * (n - 1), 2));
    EXPECT_EQ(r.equality, n == 3);
    EXPECT_TRUE(r.passed());
  }
}

TEST(Bounds, DisjointK4PathBound) {
  const Graph g = disjoint_union(complete_graph(4), complete_graph(4));
  const BoundReport r = check_theorem(g, 3, 2);
  EXPECT_EQ(r.lhs, 8U);
  EXPECT_EQ(r.rhs, Rational(8));
  EXPECT_EQ(r.rhs, oracle_thm2(g, 3));
  EXPECT_TRUE(r.equality && r.extremal && r.consistent);
}

TEST(Bounds, PetersenAndCompleteGraphs) {
  const BoundReport pet = check_theorem(petersen_graph(), 2, 1);
  EXPECT_EQ(pet.rhs, Rational(81, 2));
  EXPECT_EQ(pet.lhs, 15U);
  EXPECT_FALSE(pet.equality);
  EXPECT_EQ(check_theorem(petersen_graph(), 3, 1).lhs, 0U);

  const BoundReport c4 = check_theorem(cycle_graph(4), 3, 1);
  EXPECT_EQ(c4.lhs, 0U);
  EXPECT_EQ(c4.rhs, Rational(4));
  EXPECT_FALSE(c4.extremal);
  EXPECT_TRUE(c4.consistent);

  const BoundReport k6 = check_theorem(complete_graph(6), 3, 2);
  EXPECT_EQ(k6.lhs, 20U);
  EXPECT_TRUE(k6.equality);
}

TEST(Bounds, SingleVertexCases) {
  // The path bound at s = 1 is n for every graph.
  for (const Graph& g : enumerate_graphs(5)) {
    const BoundReport r = check_theorem(g, 1, 2);
    EXPECT_TRUE(r.equality);
    EXPECT_TRUE(r.extremal);
  }
  const BoundReport k1 = check_theorem(empty_graph(1), 1, 1);
  EXPECT_FALSE(k1.in_scope);
  EXPECT_TRUE(k1.passed());
  EXPECT_TRUE(check_theorem(complete_graph(2), 1, 1).passed());
  EXPECT_THROW(check_theorem(bowtie(), 0, 1), ContractViolation);
  EXPECT_THROW(check_theorem(bowtie(), 2, 3), ContractViolation);
}

TEST(Bounds, JsonFields) {
  const auto j = to_json(check_theorem(petersen_graph(), 2, 1));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"theorem", "s", "graph6", "lhs", "rhs_num", "rhs_den", "equality",
                                            "extremal", "consistent", "in_scope"}));
  EXPECT_EQ(j["rhs_num"], 81);
  EXPECT_EQ(j["rhs_den"], 2);
  EXPECT_EQ(j["graph6"], "IheA@GUAo");

  // No bound on 64 vertices leaves 64 bits, so the fallback is tested alone.
  EXPECT_EQ(detail::json_number(BigInt(1) << 70), "1180591620717411303424");
  EXPECT_EQ(detail::json_number(-(BigInt(1) << 63)), std::numeric_limits<std::int64_t>::min());
  const auto k64 = to_json(check_theorem(complete_graph(64), 32, 2, 0));
  EXPECT_EQ(k64["rhs_num"], 1832624140942590534LL);
}

TEST(Reduction, Examples) {
  // A triangle with a pendant path: the path vertices are light at s = 3.
  const Graph g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
  for (int s = 2; s <= 4; ++s)
    for (int theorem = 1; theorem <= 2; ++theorem) {
      const CheckReport r = reduction_invariance(g, s, theorem, compute_weights(g));
      EXPECT_TRUE(r.ok()) << r.failures();
    }
  EXPECT_EQ(heavy_cycle_set(g, 3, compute_weights(g)), bit(0) | bit(1) | bit(2));
}

TEST(Reduction, HoldsOnAllSmallGraphs) {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const VertexWeights w = compute_weights(g);
      for (int s = 2; s <= 4; ++s)
        for (int theorem = 1; theorem <= 2; ++theorem) {
          const CheckReport r = reduction_invariance(g, s, theorem, w);
          ASSERT_TRUE(r.ok()) << r.failures();
        }
    }
}

TEST(Luo, Examples) {
  const LuoReport bt = luo_dominance(bowtie(), 2, compute_weights(bowtie()));
  EXPECT_TRUE(bt.cycle_applied);
  EXPECT_EQ(bt.cycle_local, Rational(6));
  EXPECT_EQ(bt.cycle_global, Rational(6));
  EXPECT_TRUE(bt.dominated() && bt.characterized());

  const Graph kk = disjoint_union(complete_graph(4), complete_graph(4));
  const LuoReport k = luo_dominance(kk, 3, compute_weights(kk));
  EXPECT_EQ(k.path_local, Rational(8));
  EXPECT_EQ(k.path_global, Rational(8));
  EXPECT_TRUE(k.path_tight);

  const LuoReport pet = luo_dominance(petersen_graph(), 2, compute_weights(petersen_graph()));
  EXPECT_EQ(pet.cycle_local, Rational(81, 2));
  EXPECT_EQ(pet.cycle_global, Rational(81, 2));
  EXPECT_TRUE(pet.cycle_tight);

  const LuoReport tree = luo_dominance(path_graph(4), 2, compute_weights(path_graph(4)));
  EXPECT_FALSE(tree.cycle_applied);
  EXPECT_FALSE(tree.notice.empty());
  EXPECT_THROW(luo_dominance(path_graph(4), 1, compute_weights(path_graph(4))), ContractViolation);
}

TEST(Luo, DominatesOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const VertexWeights w = compute_weights(g);
      for (int s = 2; s <= 4; ++s) {
        const LuoReport r = luo_dominance(g, s, w);
        EXPECT_TRUE(r.dominated()) << write_graph6(g) << " s=" << s;
        EXPECT_TRUE(r.characterized()) << write_graph6(g) << " s=" << s;
      }
    }
}

}  // namespace
}  // namespace locturan
