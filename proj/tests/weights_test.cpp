#include <gtest/gtest.h>

#include <algorithm>

#include "locturan/enumerate.hpp"
#include "locturan/extremal.hpp"
#include "locturan/generators.hpp"
#include "locturan/io.hpp"
#include "locturan/weights.hpp"
#include "oracles/brute.hpp"

namespace locturan {
namespace {

void expect_matches_oracle(const Graph& g) {
  const VertexWeights w = compute_weights(g);
  const oracle::Weights o = oracle::exhaustive_weights(g);
  ASSERT_EQ(w.p, o.p) << write_graph6(g);
  ASSERT_EQ(w.c, o.c) << write_graph6(g);
  const int circ = o.c.empty() ? 0 : *std::max_element(o.c.begin(), o.c.end());
  EXPECT_EQ(w.circumference, circ);
}

TEST(Weights, MatchDfsOracleOnAllSmallGraphs) {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) expect_matches_oracle(g);
}

TEST(Weights, MatchDfsOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const int n = rng.between(8, 10);
    expect_matches_oracle(random_graph(n, 0.15 + 0.6 * rng.unit(), seed));
  }
}

TEST(Weights, KnownInstances) {
  // Values below come from the DFS oracle, not from the DP.
  const oracle::Weights pet = oracle::exhaustive_weights(petersen_graph());
  EXPECT_EQ(pet.p, std::vector<int>(10, 9));
  EXPECT_EQ(pet.c, std::vector<int>(10, 9));
  const VertexWeights w = compute_weights(petersen_graph());
  EXPECT_EQ(w.p, pet.p);
  EXPECT_EQ(w.c, pet.c);
  EXPECT_EQ(w.circumference, 9);

  const VertexWeights tri = compute_weights(parse_graph6("Bw"));
  EXPECT_EQ(tri.p, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(tri.c, (std::vector<int>{3, 3, 3}));
  const VertexWeights p3 = compute_weights(parse_graph6("Bg"));
  EXPECT_EQ(p3.p, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(p3.c, (std::vector<int>{2, 2, 2}));

  const VertexWeights empty = compute_weights(empty_graph(0));
  EXPECT_TRUE(empty.p.empty());
  EXPECT_EQ(empty.circumference, 0);
  EXPECT_EQ(empty.max_path(), -1);
  EXPECT_EQ(compute_weights(empty_graph(1)).c, std::vector<int>{2});
}

TEST(Weights, WeightsNeverExceedPathBound) {
  for (const Graph& g : enumerate_graphs(6)) {
    const VertexWeights w = compute_weights(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      // A cycle of length c through v yields a path with c - 1 edges through v.
      if (w.c[static_cast<std::size_t>(v)] >= 3) EXPECT_GE(w.p[static_cast<std::size_t>(v)], w.c[static_cast<std::size_t>(v)] - 1);
      EXPECT_LE(w.p[static_cast<std::size_t>(v)], g.order() - 1);
    }
  }
}

TEST(Weights, ResourceGuards) {
  EXPECT_THROW(compute_weights(empty_graph(19)), ResourceLimit);
  EXPECT_NO_THROW(compute_weights(empty_graph(19), 19));
  EXPECT_THROW(compute_weights(empty_graph(5), 23), ResourceLimit);
  EXPECT_THROW(weights_for(cycle_graph(20)), ResourceLimit);
  EXPECT_THROW(longest_path_from(empty_graph(3), 3), ContractViolation);
}

TEST(LongestPath, MaximalAndLexicographicallyFirst) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (Vertex v = 0; v < n; ++v) {
        auto all = oracle::paths_from(g, v);
        std::size_t best = 0;
        for (const auto& p : all) best = std::max(best, p.size());
        std::vector<Vertex> expected;
        for (const auto& p : all)
          if (p.size() == best && (expected.empty() || p < expected)) expected = p;
        EXPECT_EQ(longest_path_from(g, v), expected) << write_graph6(g) << " from " << v;
      }
    }
  }
}

TEST(BlockShortcut, AgreesWithDpOnRandomBlockGraphs) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const Graph g = build_block_graph(random_block_spec(rng, 6, 5, 16));
    ASSERT_TRUE(is_block_graph(g));
    EXPECT_EQ(compute_weights_block_graph(g), compute_weights(g)) << write_graph6(g);
  }
}

TEST(BlockShortcut, RejectsNonBlockGraphs) {
  EXPECT_THROW(compute_weights_block_graph(cycle_graph(4)), ContractViolation);
  EXPECT_THROW(compute_weights_block_graph(disjoint_union(complete_graph(2), complete_graph(2))), ContractViolation);
}

TEST(WeightsFor, SplitsLargeGraphsIntoComponents) {
  // 8 disjoint K5: 40 vertices, beyond the DP limit as a whole.
  Graph g = complete_graph(5);
  for (int i = 1; i < 8; ++i) g = disjoint_union(g, complete_graph(5));
  const VertexWeights w = weights_for(g);
  EXPECT_EQ(w.p, std::vector<int>(40, 4));
  EXPECT_EQ(w.c, std::vector<int>(40, 5));

  const Graph chain = generate_pdbg({{9, 9, 9, 8}, {}, {}});
  ASSERT_GT(chain.order(), kDefaultDpLimit);
  const VertexWeights wc = weights_for(chain);
  EXPECT_EQ(wc.circumference, 9);
  EXPECT_EQ(wc.max_path(), 8 + 8 + 8 + 7);
}

TEST(Hamiltonian, SmallCases) {
  EXPECT_TRUE(is_hamiltonian(cycle_graph(5)));
  EXPECT_FALSE(is_hamiltonian(petersen_graph()));
  EXPECT_FALSE(is_hamiltonian(complete_graph(2)));
  EXPECT_FALSE(is_hamiltonian(empty_graph(0)));
  EXPECT_TRUE(is_hamiltonian(complete_graph(3)));
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto c = oracle::exhaustive_weights(g).c;
      EXPECT_EQ(is_hamiltonian(g), std::all_of(c.begin(), c.end(), [&](int x) { return x == n; }));
    }
}

}  // namespace
}  // namespace locturan
