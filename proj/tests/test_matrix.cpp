#include <gtest/gtest.h>

#include <random>

#include "dehnlat/matrix.hpp"

using namespace dehnlat;

TEST(Matrix, DeterminantByBareiss) {
  EXPECT_EQ(determinant(IntMatrix{{3, -1}, {-1, 4}}), 11);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}), 30);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Matrix, InverseTimesOriginalIsIdentity) {
  const IntMatrix g{{3, -1}, {-1, 4}};
  const RatMatrix inv = inverse(g);
  EXPECT_EQ(inv(0, 0), Rational(4, 11));
  EXPECT_EQ(inv(0, 1), Rational(1, 11));
  EXPECT_EQ(to_rational(g) * inv, RatMatrix::identity(2));
}

TEST(Matrix, LdltPivots) {
  auto f = ldlt(to_rational(IntMatrix{{3, -1}, {-1, 4}}));
  ASSERT_TRUE(f.positive_definite);
  EXPECT_EQ(f.pivots[0], 3);
  EXPECT_EQ(f.pivots[1], Rational(11, 3));
  EXPECT_FALSE(ldlt(to_rational(IntMatrix{{1, 2}, {2, 1}})).positive_definite);
}

TEST(Matrix, SmithFormOfDiagonalAndLinear) {
  auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 2}});
  EXPECT_EQ(s.diagonal, (IntVector{2, 2}));
  s = smith_normal_form(IntMatrix{{3, -1}, {-1, 4}});
  EXPECT_EQ(s.diagonal, (IntVector{1, 11}));
  s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.diagonal, (IntVector{1, 6}));
}

TEST(Matrix, SmithTransformsAreMutualInverses) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    if (determinant(m) == 0) continue;
    auto s = smith_normal_form(m);
    EXPECT_EQ(s.row_transform * s.row_transform_inverse, IntMatrix::identity(n));
    Integer prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      prod *= s.diagonal[i];
      if (i + 1 < n && s.diagonal[i] != 0) EXPECT_EQ(mod(s.diagonal[i + 1], s.diagonal[i]), 0);
    }
    EXPECT_EQ(abs(prod), abs(determinant(m)));
  }
}

TEST(Matrix, RowBasisSpansSameLattice) {
  const IntMatrix gens{{2, 4}, {1, 2}, {0, 3}};
  const IntMatrix b = row_basis(gens);
  ASSERT_EQ(b.rows(), 2u);
  EXPECT_EQ(abs(determinant(b)), 3);
}
