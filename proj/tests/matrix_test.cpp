#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <limits>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "walkiso/generators.hpp"
#include "walkiso/matrix.hpp"

namespace walkiso {
namespace {

using testing::complete;

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST(MatMulTest, IdentityIsNeutral) {
  auto a = adjacency_matrix(testing::petersen()).matrix();
  EXPECT_EQ(mat_mul(IntMatrix::identity(10), a), a);
  EXPECT_EQ(mat_mul(a, IntMatrix::identity(10)), a);
}

TEST(MatMulTest, K2SquaredIsIdentity) {
  auto a = adjacency_matrix(complete(2)).matrix();
  EXPECT_EQ(mat_mul(a, a), IntMatrix::identity(2));
}

TEST(MatMulTest, K3Squared) {
  // Walk counts of length 2 in K3: two closed walks per vertex, one between
  // any two distinct vertices.
  auto a = adjacency_matrix(complete(3)).matrix();
  auto sq = mat_mul(a, a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(sq(i, j), i == j ? 2 : 1);
}

TEST(MatMulTest, DimensionMismatch) {
  EXPECT_THROW(mat_mul(IntMatrix(2), IntMatrix(3)), MatrixError);
}

TEST(MatMulTest, CountsSchoolbookOperations) {
  OpCounter ops;
  mat_mul(IntMatrix::identity(4), IntMatrix::identity(4), &ops);
  EXPECT_EQ(ops.mults, 64u);
  EXPECT_EQ(ops.adds, 48u);
  EXPECT_EQ(ops.max_bitlen, 1u);
}

TEST(MatMulTest, NoOverflow) {
  IntMatrix a(2);
  a(0, 0) = BigInt(1) << 100;
  auto sq = mat_mul(a, a);
  EXPECT_EQ(sq(0, 0), BigInt(1) << 200);
}

TEST(ExactSymMatrixTest, RejectsAsymmetricOrNegative) {
  IntMatrix m(2);
  m(0, 1) = 1;
  EXPECT_THROW(ExactSymMatrix{m}, MatrixError);
  m(1, 0) = 1;
  m(0, 0) = -1;
  EXPECT_THROW(ExactSymMatrix{m}, MatrixError);
}

TEST(PowerSequenceTest, K2) {
  auto d = power_sequence(adjacency_matrix(complete(2)), 3);
  EXPECT_EQ(d.at(1), ints({0, 0}));
  EXPECT_EQ(d.at(2), ints({1, 1}));
  EXPECT_EQ(d.at(3), ints({0, 0}));
}

TEST(PowerSequenceTest, K3MatchesWalkEnumeration) {
  auto d = power_sequence(adjacency_matrix(complete(3)), 3);
  EXPECT_EQ(testing::count_closed_walks(complete(3), 0, 2), 2u);
  EXPECT_EQ(testing::count_closed_walks(complete(3), 0, 3), 2u);
  EXPECT_EQ(d.at(2), ints({2, 2, 2}));
  EXPECT_EQ(d.at(3), ints({2, 2, 2}));
}

TEST(PowerSequenceTest, ZeroMatrix) {
  auto d = power_sequence(ExactSymMatrix(IntMatrix(4)), 5);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(d.at(k), ints({0, 0, 0, 0}));
}

TEST(PowerSequenceTest, RejectsZeroPower) {
  EXPECT_THROW(power_sequence(adjacency_matrix(complete(2)), 0), std::invalid_argument);
  auto d = power_sequence(adjacency_matrix(complete(2)), 2);
  EXPECT_THROW(d.at(3), std::out_of_range);
}

TEST(TraceTest, Examples) {
  EXPECT_EQ(trace(IntMatrix::identity(4)), 4);
  auto a = adjacency_matrix(complete(3)).matrix();
  EXPECT_EQ(trace(mat_mul(a, a)), 6);
  EXPECT_EQ(trace(IntMatrix(5)), 0);
}

TEST(PowerWalkerTest, AgreesWithRepeatedMultiplication) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.below(9);
    auto a = adjacency_matrix(gnp(n, 0.5, rng.next()));
    PowerWalker w(a);
    IntMatrix p = a.matrix();
    for (std::size_t k = 2; k <= n + 1; ++k) {
      w.step();
      p = mat_mul(p, a.matrix());
      ASSERT_EQ(w.current(), p);
      ASSERT_TRUE(p.is_symmetric());
    }
  }
}

TEST(MatrixProperty, WalkCountsMatchEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    auto g = gnp(n, rng.unit(), rng.next());
    auto d = power_sequence(adjacency_matrix(g), 5);
    EXPECT_EQ(d.at(1), std::vector<BigInt>(n, 0));
    for (Vertex v = 0; v < n; ++v) EXPECT_EQ(d.at(2)[v], g.degree(v));
    for (std::size_t k = 1; k <= 5; ++k)
      for (Vertex v = 0; v < n; ++v)
        ASSERT_EQ(d.at(k)[v], testing::count_closed_walks(g, v, k)) << "k=" << k;
  }
}

TEST(MatrixProperty, TraceIsDiagonalSumAndEntriesStayBounded) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(20);
    auto a = adjacency_matrix(gnp(n, rng.unit(), rng.next()));
    OpCounter ops;
    auto d = power_sequence(a, n, &ops);  // throws on any entry above n^(k-1)
    PowerWalker w(a);
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt sum = 0;
      for (const auto& x : d.at(k)) sum += x;
      ASSERT_EQ(trace(w.current()), sum);
      if (k < n) w.step();
    }
    EXPECT_LE(static_cast<double>(ops.max_bitlen), n * std::log2(static_cast<double>(n)));
  }
}

TEST(MatrixProperty, CompleteGraphHitsGrowthBoundShape) {
  // Entries of A(K_n)^k: diagonal ((n-1)^k + (n-1)(-1)^k)/n.
  const std::size_t n = 17;
  auto d = power_sequence(adjacency_matrix(complete(n)), n);
  BigInt m = n - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt expect = (boost::multiprecision::pow(m, static_cast<unsigned>(k)) +
                     BigInt(k % 2 ? -1 : 1) * m) / n;
    EXPECT_EQ(d.at(k)[0], expect);
  }
  // Already beyond a signed 64-bit integer at n = 17.
  EXPECT_GT(d.at(n)[0], BigInt(std::numeric_limits<std::int64_t>::max()));
}

}  // namespace
}  // namespace walkiso
