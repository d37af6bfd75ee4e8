#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "walkiso/generators.hpp"
#include "walkiso/refinement.hpp"

namespace walkiso {
namespace {

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

ConnectivityProfile profile_of(std::initializer_list<std::initializer_list<int>> rows) {
  ConnectivityProfile p;
  for (auto r : rows) {
    p.rows.emplace_back(r.begin(), r.end());
    p.k = r.size() + 1;
  }
  return p;
}

TEST(SelfConnectivityTest, DegreesAtOrderTwo) {
  auto dk3 = power_sequence(adjacency_matrix(testing::complete(3)), 2);
  EXPECT_EQ(self_connectivity(dk3, 2), ints({2, 2, 2}));
  auto dp = power_sequence(adjacency_matrix(testing::path(3)), 2);
  EXPECT_EQ(self_connectivity(dp, 2), ints({1, 2, 1}));
  EXPECT_THROW(self_connectivity(dp, 3), std::out_of_range);
}

TEST(SelfConnectivityTest, HexagonVersusTwoTriangles) {
  auto c6 = testing::cycle(6);
  auto tt = testing::two_triangles();
  auto d1 = power_sequence(adjacency_matrix(c6), 3);
  auto d2 = power_sequence(adjacency_matrix(tt), 3);
  for (Vertex v = 0; v < 6; ++v) {
    EXPECT_EQ(testing::count_closed_walks(c6, v, 3), 0u);
    EXPECT_EQ(testing::count_closed_walks(tt, v, 3), 2u);
  }
  EXPECT_EQ(self_connectivity(d1, 3), ints({0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(self_connectivity(d2, 3), ints({2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(self_connectivity(d1, 2), self_connectivity(d2, 2));
}

TEST(KRearrangementTest, CenterFirstPath) {
  auto [perm, part] = k_rearrangement(profile_of({{2}, {1}, {1}}));
  EXPECT_EQ(part.order(), (std::vector<Vertex>{1, 2, 0}));
  EXPECT_EQ(part.multiplicities(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(perm, Permutation({2, 0, 1}));
}

TEST(KRearrangementTest, AllEqualIsIdentity) {
  auto [perm, part] = k_rearrangement(profile_of({{3, 0}, {3, 0}, {3, 0}, {3, 0}}));
  EXPECT_EQ(perm, Permutation::identity(4));
  EXPECT_EQ(part.multiplicities(), (std::vector<std::size_t>{4}));
}

TEST(KRearrangementTest, GroupsEqualValues) {
  auto [perm, part] = k_rearrangement(profile_of({{5}, {7}, {5}}));
  EXPECT_EQ(part.order(), (std::vector<Vertex>{0, 2, 1}));
  EXPECT_EQ(part.multiplicities(), (std::vector<std::size_t>{2, 1}));
}

TEST(KRearrangementTest, LexicographicAcrossOrders) {
  // Lower order decides first; later orders only break ties.
  auto [perm, part] = k_rearrangement(profile_of({{2, 9}, {1, 5}, {2, 0}, {1, 5}}));
  EXPECT_EQ(part.order(), (std::vector<Vertex>{1, 3, 2, 0}));
  EXPECT_EQ(part.multiplicities(), (std::vector<std::size_t>{2, 1, 1}));
}

TEST(KDiagonalTest, Examples) {
  auto dk3 = power_sequence(adjacency_matrix(testing::complete(3)), 2);
  auto pk3 = ConnectivityProfile::from_diagonals(dk3, 2);
  EXPECT_EQ(k_diagonal(pk3, k_rearrangement(pk3).first).values, ints({2, 2, 2}));
  auto dp = power_sequence(adjacency_matrix(testing::path(3)), 2);
  auto pp = ConnectivityProfile::from_diagonals(dp, 2);
  EXPECT_EQ(k_diagonal(pp, k_rearrangement(pp).first).values, ints({1, 1, 2}));
}

TEST(RefineTest, SplitsSingleBlock) {
  auto r = refine(OrderedPartition::unit(3), ints({5, 5, 7}));
  EXPECT_EQ(r.multiplicities(), (std::vector<std::size_t>{2, 1}));
}

TEST(RefineTest, SingletonsUnchanged) {
  OrderedPartition p({2, 0, 1}, {0, 1, 2, 3});
  EXPECT_EQ(refine(p, ints({9, 1, 4})), p);
}

TEST(RefineTest, SortsWithinBlocksOnly) {
  OrderedPartition p({0, 1, 2, 3}, {0, 2, 4});
  auto r = refine(p, ints({3, 3, 2, 1}));
  EXPECT_EQ(r.multiplicities(), (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(r.order(), (std::vector<Vertex>{0, 1, 3, 2}));
}

TEST(RefineTest, RejectsBadBounds) {
  EXPECT_THROW(OrderedPartition({0, 1}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(OrderedPartition({0, 1}, {0, 1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(OrderedPartition({0, 0}, {0, 2}), GraphError);
}

TEST(RefinementProperty, InvariantUnderRelabeling) {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(15);
    auto g = gnp(n, rng.unit(), rng.next());
    auto base = kdiagonal_sequence(g, n);
    for (int rep = 0; rep < 5; ++rep) {
      auto h = apply_permutation(g, random_permutation(n, rng));
      ASSERT_EQ(kdiagonal_sequence(h, n), base);
    }
  }
}

TEST(RefinementProperty, TieBreakingNeverChangesDiagonals) {
  Rng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng.below(11);
    auto g = trial % 2 ? gnp(n, 0.5, rng.next()) : testing::cycle(n);
    auto seq = kdiagonal_sequence(g, n);
    auto diags = power_sequence(adjacency_matrix(g), n);
    for (std::size_t k = 2; k <= n; ++k) {
      auto prof = ConnectivityProfile::from_diagonals(diags, k);
      std::vector<std::size_t> rank(n);
      std::iota(rank.begin(), rank.end(), std::size_t{0});
      rng.shuffle(rank);
      auto [perm, part] = k_rearrangement(prof, rank);
      ASSERT_EQ(k_diagonal(prof, perm), seq[k - 2]) << "k=" << k;
    }
  }
}

TEST(RefinementProperty, MonotoneAndMatchesDirectGrouping) {
  Rng rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(8);
    auto g = gnp(n, rng.unit(), rng.next());
    DiagonalRefiner r(g);
    std::vector<std::size_t> prev_blocks;
    std::size_t prev_count = 0;
    for (std::size_t k = 2; k <= std::min<std::size_t>(n, 6); ++k) {
      r.advance();
      const auto& part = r.partition();
      auto groups = testing::group_by_walk_profile(g, k);
      ASSERT_EQ(part.block_count(), groups.size());
      for (std::size_t b = 0; b < groups.size(); ++b) {
        std::vector<Vertex> blk(part.block(b).begin(), part.block(b).end());
        std::sort(blk.begin(), blk.end());
        ASSERT_EQ(blk, groups[b]) << "k=" << k << " block " << b;
      }
      EXPECT_GE(part.block_count(), prev_count);
      prev_count = part.block_count();
      // Every block is contained in a block of the previous order.
      if (!prev_blocks.empty()) {
        for (std::size_t b = 0; b < part.block_count(); ++b) {
          auto v0 = part.block(b)[0];
          for (auto v : part.block(b)) EXPECT_EQ(prev_blocks[v], prev_blocks[v0]);
        }
      }
      prev_blocks.assign(n, 0);
      for (std::size_t b = 0; b < part.block_count(); ++b)
        for (auto v : part.block(b)) prev_blocks[v] = b;
    }
  }
}

TEST(RefinementProperty, RegularGraphsAreInvisibleAtOrderTwo) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = random_regular(12, 3, seed);
    auto d2 = kdiagonal_sequence(g, 2).front();
    EXPECT_EQ(d2.values, std::vector<BigInt>(12, 3));
  }
}

}  // namespace
}  // namespace walkiso
