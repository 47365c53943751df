#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "arbor/incidence.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

namespace arbor {
namespace {

using testing::random_digraph;
using testing::running_example;
using testing::weighted_running_example;

TEST(IncidenceTest, RunningExample) {
  const Digraph g = running_example();
  EXPECT_EQ(incidence_in(g), (Matrix{{0, 1, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(incidence_out(g), (Matrix{{1, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}));
}

TEST(IncidenceTest, NoEdges) {
  const Digraph g = Digraph::build({"a", "b"}, {});
  EXPECT_EQ(incidence_in(g).rows(), 0u);
  EXPECT_EQ(incidence_in(g).cols(), 2u);
  EXPECT_EQ(incidence_out(g).rows(), 2u);
  EXPECT_EQ(incidence_out(g).cols(), 0u);
}

TEST(IncidenceTest, OneNonzeroPerEdge) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph g = random_digraph(rng, 1 + trial % 6, 0.5, false);
    const Matrix n = incidence_in(g);
    const Matrix m = incidence_out(g);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      int row_nonzero = 0;
      int col_nonzero = 0;
      for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        row_nonzero += n(k, i) != 0 ? 1 : 0;
        col_nonzero += m(i, k) != 0 ? 1 : 0;
        if (n(k, i) != 0) EXPECT_EQ(n(k, i), 1);
        if (m(i, k) != 0) EXPECT_EQ(m(i, k), 1);
      }
      EXPECT_EQ(row_nonzero, 1);
      EXPECT_EQ(col_nonzero, 1);
    }
  }
}

TEST(IncidenceTest, ApproximateWeightedRendering) {
  const auto n = approx_weighted_incidence_in(weighted_running_example());
  ASSERT_EQ(n.size(), 5u);
  EXPECT_NEAR(n[0][1], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(n[3][0], std::sqrt(7.0), 1e-12);
  EXPECT_EQ(n[3][1], 0.0);
  const auto m = approx_weighted_incidence_out(weighted_running_example());
  EXPECT_NEAR(m[0][4], std::sqrt(11.0), 1e-12);
}

TEST(GramProductsTest, RunningExample) {
  const GramProducts gp = gram_products(running_example());
  EXPECT_EQ(gp.d_in, (Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(gp.d_out, (Matrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_EQ(gp.a_v, (Matrix{{0, 1, 1}, {0, 0, 1}, {1, 1, 0}}));
}

TEST(GramProductsTest, Weighted) {
  const GramProducts gp = gram_products(weighted_running_example());
  EXPECT_EQ(gp.d_in, (Matrix{{7, 0, 0}, {0, 7, 0}, {0, 0, 14}}));
  EXPECT_EQ(gp.d_out, (Matrix{{13, 0, 0}, {0, 3, 0}, {0, 0, 12}}));
  EXPECT_EQ(gp.a_v, (Matrix{{0, 2, 11}, {0, 0, 3}, {7, 5, 0}}));
}

TEST(GramProductsTest, NoEdges) {
  const GramProducts gp = gram_products(Digraph::build({"a", "b", "c"}, {}));
  EXPECT_TRUE(gp.d_in.is_zero());
  EXPECT_TRUE(gp.a_v.is_zero());
  EXPECT_TRUE(gp.d_out.is_zero());
}

TEST(GramProductsTest, EqualsLiteralIncidenceProducts) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = random_digraph(rng, 1 + trial % 6, 0.5, false);
    const GramProducts gp = gram_products(g);
    const Matrix n = incidence_in(g);
    const Matrix m = incidence_out(g);
    EXPECT_EQ(gp.d_in, transpose(n) * n);
    EXPECT_EQ(gp.a_v, m * n);
    EXPECT_EQ(gp.d_out, m * transpose(m));
  }
}

TEST(LaplacianTest, RunningExample) {
  const LaplacianPair lp = laplacians(running_example());
  EXPECT_EQ(lp.l1, (Matrix{{1, -1, -1}, {0, 2, -1}, {-1, -1, 2}}));
  EXPECT_EQ(lp.l2, (Matrix{{2, 0, -1}, {-1, 1, -1}, {-1, -1, 2}}));
  const VertexId v3{2};
  EXPECT_EQ(reduced_laplacian(lp, Which::L1, v3), (Matrix{{1, -1}, {0, 2}}));
  EXPECT_EQ(reduced_laplacian(lp, Which::L2, v3), (Matrix{{2, 0}, {-1, 1}}));
}

TEST(LaplacianTest, DegenerateShapes) {
  const LaplacianPair empty = laplacians(Digraph::build({"a", "b"}, {}));
  EXPECT_TRUE(empty.l1.is_zero());
  EXPECT_TRUE(empty.l2.is_zero());
  const LaplacianPair single = laplacians(Digraph::build({"a"}, {}));
  EXPECT_EQ(reduced_laplacian(single, Which::L1, VertexId{0}), Matrix(0, 0));
  EXPECT_EQ(testing::error_kind([&] { reduced_laplacian(single, Which::L2, VertexId{1}); }),
            ErrorKind::IndexOutOfRange);
}

TEST(LaplacianTest, ColumnSumsVanish) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = random_digraph(rng, 1 + trial % 6, 0.5, trial % 2 == 0);
    const LaplacianPair lp = laplacians(g);
    for (const Rational& s : lp.l1.column_sums()) EXPECT_EQ(s, 0);
    for (const Rational& s : lp.l2.column_sums()) EXPECT_EQ(s, 0);
    Matrix ones(1, g.vertex_count());
    for (std::size_t j = 0; j < g.vertex_count(); ++j) ones(0, j) = 1;
    EXPECT_TRUE((ones * (transpose(incidence_in(g)) - incidence_out(g))).is_zero());
  }
}

TEST(FactorizationTest, Examples) {
  const Digraph g = running_example();
  EXPECT_TRUE(verify_factorization(g, g.vertex("v3")));
  EXPECT_TRUE(verify_factorization(Digraph::build({"a", "b"}, {})));
  const Digraph w = weighted_running_example();
  EXPECT_TRUE(verify_factorization(w, w.vertex("v1")));
}

TEST(FactorizationTest, ChecksCoverEveryRoot) {
  const auto checks = factorization_checks(running_example(), std::nullopt);
  EXPECT_EQ(checks.size(), 5u + 2u * 3u);
  for (const auto& c : checks) EXPECT_TRUE(c.holds) << c.name;
}

TEST(FactorizationTest, WeightedSandwichMatchesLaplacian) {
  // (N^T - M) W N built from literal matrices; W = diag(w) is the product of
  // the two sqrt(w) scalings.
  const Digraph g = weighted_running_example();
  const Matrix n = incidence_in(g);
  const Matrix m = incidence_out(g);
  const std::vector<Rational> w = g.weights();
  const Matrix W = Matrix::diagonal(w);
  const LaplacianPair lp = laplacians(g);
  EXPECT_EQ(lp.l1, (transpose(n) - m) * W * n);
  EXPECT_EQ(lp.l2, (m - transpose(n)) * W * transpose(m));
}

TEST(FactorizationTest, RandomGraphsAllRoots) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Digraph g = random_digraph(rng, 1 + trial % 6, 0.5, trial % 2 == 1);
    EXPECT_TRUE(verify_factorization(g));
  }
}

}  // namespace
}  // namespace arbor
