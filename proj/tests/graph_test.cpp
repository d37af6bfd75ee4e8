#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "walkiso/generators.hpp"
#include "walkiso/graph.hpp"
#include "walkiso/matrix.hpp"

namespace walkiso {
namespace {

using testing::complete;
using testing::path;

TEST(GraphTest, RejectsSelfLoop) { EXPECT_THROW(Graph(3, {{1, 1}}), GraphError); }

TEST(GraphTest, RejectsOutOfRangeEndpoint) { EXPECT_THROW(Graph(3, {{0, 3}}), GraphError); }

TEST(GraphTest, RejectsDuplicateEdgeInEitherOrientation) {
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  Graph g(3, {{0, 1}, {1, 0}}, /*dedupe=*/true);
  EXPECT_EQ(g.size(), 1u);
}

TEST(GraphTest, RejectsZeroVertices) { EXPECT_THROW(Graph(0, {}), GraphError); }

TEST(GraphTest, EdgesAreNormalized) {
  Graph g(4, {{3, 1}, {2, 0}});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 3}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(GraphTest, DisconnectedGraphsAreFine) {
  Graph g(5, {{0, 1}, {3, 4}});
  EXPECT_EQ(g.degree(2), 0u);
}

TEST(PermutationTest, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), GraphError);
  EXPECT_THROW(Permutation({0, 3, 1}), GraphError);
}

TEST(PermutationTest, InverseAndComposition) {
  Permutation p({2, 0, 1});
  EXPECT_EQ(p.inverse().after(p), Permutation::identity(3));
  EXPECT_EQ(p.after(p.inverse()), Permutation::identity(3));
}

TEST(AdjacencyMatrixTest, CompleteGraph) {
  auto a = adjacency_matrix(complete(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a(i, j), i == j ? 0 : 1);
}

TEST(AdjacencyMatrixTest, EmptyGraphIsZero) {
  EXPECT_EQ(adjacency_matrix(testing::empty(4)).matrix(), IntMatrix(4));
}

TEST(AdjacencyMatrixTest, Path) {
  auto a = adjacency_matrix(path(3));
  IntMatrix expect(3);
  expect(0, 1) = expect(1, 0) = expect(1, 2) = expect(2, 1) = 1;
  EXPECT_EQ(a.matrix(), expect);
  EXPECT_TRUE(a.is_adjacency());
}

TEST(ApplyPermutationTest, Identity) {
  auto g = path(5);
  EXPECT_EQ(apply_permutation(g, Permutation::identity(5)), g);
}

TEST(ApplyPermutationTest, CompleteGraphIsInvariant) {
  EXPECT_EQ(apply_permutation(complete(3), Permutation({2, 0, 1})), complete(3));
}

TEST(ApplyPermutationTest, PathSwapMovesCenter) {
  auto h = apply_permutation(path(3), Permutation({1, 0, 2}));
  EXPECT_EQ(h.degree(0), 2u);
  EXPECT_EQ(h, Graph(3, {{0, 1}, {0, 2}}));
}

TEST(ApplyPermutationTest, LengthMismatch) {
  EXPECT_THROW(apply_permutation(path(3), Permutation::identity(4)), GraphError);
}

TEST(GraphProperty, PermutationRoundTripAndConjugation) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(20);
    auto g = gnp(n, rng.unit(), rng.next());
    auto p = random_permutation(n, rng);
    auto h = apply_permutation(g, p);
    EXPECT_EQ(apply_permutation(h, p.inverse()), g);
    EXPECT_TRUE(verify_mapping(g, h, p));

    // A_h = P·A_g·Pᵀ: entry (p(i), p(j)) of A_h equals entry (i, j) of A_g.
    auto ag = adjacency_matrix(g);
    auto ah = adjacency_matrix(h);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(ah(p[i], p[j]), ag(i, j));
  }
}

TEST(VerifyMappingTest, Examples) {
  EXPECT_TRUE(verify_mapping(complete(3), complete(3), Permutation::identity(3)));
  EXPECT_FALSE(verify_mapping(complete(3), path(3), Permutation::identity(3)));
  EXPECT_FALSE(verify_mapping(complete(3), path(3), Permutation({1, 2, 0})));
  EXPECT_THROW(verify_mapping(complete(3), complete(3), Permutation::identity(2)), GraphError);
}

}  // namespace
}  // namespace walkiso
