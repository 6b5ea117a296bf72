#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "dehnlat/lens.hpp"

using namespace dehnlat;

namespace {

RatVector sorted(RatVector v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(ContinuedFraction, Examples) {
  EXPECT_EQ(neg_continued_fraction(3, 1).coefficients, (IntVector{3}));
  EXPECT_EQ(neg_continued_fraction(1, 3).coefficients, (IntVector{1, 2, 2}));
  EXPECT_EQ(neg_continued_fraction(11, 4).coefficients, (IntVector{3, 4}));
  EXPECT_EQ(neg_continued_fraction(11, 4).value(), Rational(11, 4));
}

TEST(ContinuedFraction, RejectsNonCoprime) {
  try {
    neg_continued_fraction(6, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
}

TEST(LinearLattice, Examples) {
  EXPECT_EQ(linear_lattice(3, 1).gram(), (IntMatrix{{3}}));
  const auto L = linear_lattice(11, 4);
  EXPECT_EQ(L.gram(), (IntMatrix{{3, -1}, {-1, 4}}));
  EXPECT_EQ(L.det(), 11);
  for (long n = 2; n < 12; ++n) EXPECT_EQ(linear_lattice(n, 1).gram(), (IntMatrix{{Integer(n)}}));
}

TEST(LinearLattice, DeterminantIsP) {
  for (long p = 2; p <= 100; ++p)
    for (long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) ASSERT_EQ(linear_lattice(p, q).det(), p) << p << "/" << q;
  for (long q : {1L, 2L, 7L, 100L, 199L}) EXPECT_EQ(linear_lattice(200 + (q % 2 == 0), q).det(), 200 + (q % 2 == 0));
}

TEST(DLens, ConjugationSymmetryAndDenominators) {
  for (long p = 2; p <= 60; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto t = d_lens_table(LensSpace::make(p, q));
      for (long i = 0; i < p; ++i) {
        const auto& v = t.values[static_cast<std::size_t>(i)];
        ASSERT_EQ(v, t.values[static_cast<std::size_t>(t.conjugate(i))]) << p << "," << q << "," << i;
        ASSERT_EQ(mod(Integer(4 * p), v.get_den()), 0) << p << "," << q << "," << i;
      }
    }
}

TEST(DLens, HomeomorphicLensSpacesShareTheMultiset) {
  // L(p,q) and L(p,q') with q q' = 1 mod p are the same oriented manifold.
  for (long p = 2; p <= 40; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      long inv = 1;
      while ((inv * q) % p != 1 % p) ++inv;
      EXPECT_EQ(sorted(d_lens_table(LensSpace::make(p, q)).values), sorted(d_lens_table(LensSpace::make(p, inv)).values))
          << p << "," << q;
    }
}
