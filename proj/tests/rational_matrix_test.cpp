#include <random>

#include <gtest/gtest.h>

#include "arbor/error.hpp"
#include "arbor/matrix.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

namespace arbor {
namespace {

using testing::leibniz_det;
using testing::error_kind;
using testing::random_matrix;

TEST(RationalTest, ParsesAndNormalizes) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(parse_rational("0").get_den(), 1);
  EXPECT_EQ(error_kind([] { parse_rational("1/0"); }), ErrorKind::ParseError);
  EXPECT_EQ(error_kind([] { parse_rational("1.5"); }), ErrorKind::ParseError);
  EXPECT_EQ(error_kind([] { parse_rational(""); }), ErrorKind::ParseError);
}

TEST(RationalTest, AdditionIsExact) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> part(1, 1'000'000);
  for (int trial = 0; trial < 500; ++trial) {
    Rational x(part(rng), part(rng));
    Rational y(-part(rng), part(rng));
    x.canonicalize();
    y.canonicalize();
    EXPECT_EQ((x + y) - y, x);
  }
}

TEST(RationalTest, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(30, 5), 142506);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(DetTest, Examples) {
  EXPECT_EQ(det(Matrix{{1, -1}, {0, 2}}), 2);
  EXPECT_EQ(det(Matrix{{2, -1}, {-1, 2}}), 3);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(det(Matrix::identity(n)), 1);
  EXPECT_EQ(det(Matrix(0, 0)), 1);
}

TEST(DetTest, NeedsPivotSwap) {
  EXPECT_EQ(det(Matrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det(Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
  EXPECT_EQ(det(Matrix{{0, 2, 1}, {0, 1, 3}, {4, 0, 0}}), 20);
}

TEST(DetTest, ZeroColumnAndSingular) {
  EXPECT_EQ(det(Matrix{{1, 0}, {2, 0}}), 0);
  EXPECT_EQ(det(Matrix{{1, 2}, {2, 4}}), 0);
}

TEST(DetTest, NotSquare) {
  EXPECT_EQ(error_kind([] { det(Matrix(2, 3)); }), ErrorKind::NotSquare);
}

TEST(DetTest, MatchesLeibnizExpansion) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix m = random_matrix(rng, n, n);
      ASSERT_EQ(det(m), leibniz_det(m)) << to_string(m);
    }
  }
}

TEST(DetTest, MatchesLeibnizOnSparseIntegerMatrices) {
  // Lots of zeros exercise the pivot search.
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> entry(-1, 1);
  std::bernoulli_distribution nonzero(0.35);
  for (int trial = 0; trial < 300; ++trial) {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = nonzero(rng) ? entry(rng) : 0;
    }
    ASSERT_EQ(det(m), leibniz_det(m)) << to_string(m);
  }
}

TEST(DetTest, TransposeAndProductRules) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Matrix a = random_matrix(rng, n, n);
    const Matrix b = random_matrix(rng, n, n);
    EXPECT_EQ(det(transpose(a)), det(a));
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(MatrixTest, DeleteRowCol) {
  const Matrix l1{{1, -1, -1}, {0, 2, -1}, {-1, -1, 2}};
  EXPECT_EQ(delete_row_col(l1, 2), (Matrix{{1, -1}, {0, 2}}));
  EXPECT_EQ(delete_row_col(Matrix{{5}}, 0), Matrix(0, 0));
  EXPECT_EQ(error_kind([&] { delete_row_col(l1, 3); }), ErrorKind::IndexOutOfRange);
}

TEST(MatrixTest, Cofactor) {
  const Matrix l1{{1, -1, -1}, {0, 2, -1}, {-1, -1, 2}};
  const Matrix l2{{2, 0, -1}, {-1, 1, -1}, {-1, -1, 2}};
  EXPECT_EQ(cofactor(l1, 0, 0), 3);
  EXPECT_EQ(cofactor(l2, 2, 2), 2);
  EXPECT_EQ(cofactor(Matrix::identity(2), 0, 1), 0);
  EXPECT_EQ(error_kind([&] { cofactor(l1, 0, 5); }), ErrorKind::IndexOutOfRange);
}

TEST(MatrixTest, CofactorSignConvention) {
  std::mt19937_64 rng(17);
  const Matrix m = random_matrix(rng, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      // Minor built by hand from the entries, not via delete_row/col.
      Matrix minor(3, 3);
      for (std::size_t a = 0, r = 0; a < 4; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, c = 0; b < 4; ++b) {
          if (b == j) continue;
          minor(r, c++) = m(a, b);
        }
        ++r;
      }
      const Rational expected = ((i + j) % 2 ? -1 : 1) * leibniz_det(minor);
      EXPECT_EQ(cofactor(m, i, j), expected);
    }
  }
}

TEST(MatrixTest, Select) {
  const Matrix n_in{{0, 1, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const Matrix m_out{{1, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 1, 0}};
  EXPECT_EQ(select(n_in, IndexSet{0, 3}, std::nullopt), (Matrix{{0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(select(m_out, std::nullopt, IndexSet{0, 3}), (Matrix{{1, 0}, {0, 0}, {0, 1}}));
  EXPECT_EQ(select(n_in, std::nullopt, std::nullopt), n_in);
  EXPECT_EQ(error_kind([&] { select(n_in, IndexSet{3, 0}, std::nullopt); }),
            ErrorKind::UnsortedSelector);
  EXPECT_EQ(error_kind([&] { select(n_in, IndexSet{0, 9}, std::nullopt); }),
            ErrorKind::IndexOutOfRange);
}

TEST(MatrixTest, ArithmeticAndShapes) {
  const Matrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(a + a, scale(a, 2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * Matrix::identity(2), a);
  EXPECT_EQ(error_kind([&] { multiply(a, Matrix(3, 1)); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(error_kind([&] { add(a, Matrix(2, 3)); }), ErrorKind::ShapeMismatch);
  const std::vector<Rational> v{1, -1};
  EXPECT_EQ(multiply(a, v), (std::vector<Rational>{-1, -1}));
}

TEST(MatrixTest, PairedProductEqualsDiagonalSandwich) {
  std::mt19937_64 rng(19);
  const Matrix a = random_matrix(rng, 3, 5);
  const Matrix b = random_matrix(rng, 5, 2);
  const std::vector<Rational> w{2, Rational(1, 3), 5, 7, Rational(11, 2)};
  EXPECT_EQ(paired_product(a, w, b), a * Matrix::diagonal(w) * b);
}

TEST(MatrixTest, PowerIsZero) {
  EXPECT_TRUE(power_is_zero(Matrix{{0, 1}, {0, 0}}, 2));
  EXPECT_FALSE(power_is_zero(Matrix{{0, 1}, {0, 0}}, 1));
  EXPECT_FALSE(power_is_zero(Matrix::identity(3), 1));
  EXPECT_FALSE(power_is_zero(Matrix::identity(3), 5));
  EXPECT_TRUE(power_is_zero(Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, 3));
  EXPECT_FALSE(power_is_zero(Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, 2));
  EXPECT_EQ(error_kind([] { power_is_zero(Matrix(2, 3), 2); }), ErrorKind::NotSquare);
}

}  // namespace
}  // namespace arbor
