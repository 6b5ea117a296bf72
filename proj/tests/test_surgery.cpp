#include <gtest/gtest.h>

#include <algorithm>

#include "dehnlat/surgery.hpp"

using namespace dehnlat;

namespace {

const VSequence kUnknot = VSequence::make({}, 0);
const VSequence kTrefoil = VSequence::make({1}, 1);
const VSequence kT25 = VSequence::make({1, 1}, 2);

KnotModel knot(const std::string& name, AlexanderPolynomial a) {
  KnotModel k;
  k.name = name;
  k.slice_genus = a.degree();
  k.alexander = std::move(a);
  k.l_space = true;
  return k;
}

}  // namespace

TEST(Beta, Values) {
  EXPECT_EQ(beta(2), -1);
  EXPECT_EQ(beta(3), Rational(-2, 3));
  EXPECT_EQ(beta(1), 0);
}

TEST(DSurgery, Examples) {
  for (long i = 0; i < 7; ++i) EXPECT_EQ(d_surgery(kUnknot, 7, 3, i), d_lens(7, 3, i));
  EXPECT_EQ(d_surgery(kTrefoil, 8, 1, 0), Rational(-1, 4));
  EXPECT_EQ(d_surgery(kTrefoil, 8, 1, 4), Rational(-1, 4));
}

TEST(DTable, Examples) {
  EXPECT_EQ(d_table(kUnknot, 3).values, (RatVector{Rational(1, 2), Rational(-1, 6), Rational(-1, 6)}));
  const auto t = d_table(kTrefoil, 8);
  for (long i = 0; i < 8; ++i) EXPECT_EQ(t.values[static_cast<std::size_t>(i)], t.values[static_cast<std::size_t>((8 - i) % 8)]);
  EXPECT_EQ(d_table(kT25, 1).values, (RatVector{Rational(-2)}));
}

TEST(BetaBound, Examples) {
  EXPECT_TRUE(beta_bound_check(kTrefoil, 8).holds);
  EXPECT_EQ(beta_bound_check(kTrefoil, 8).min_four_d, -1);
  const auto r = beta_bound_check(kTrefoil, 7);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(*r.failing_index, 0);
  for (long n = 1; n < 30; ++n) EXPECT_TRUE(beta_bound_check(kUnknot, n).holds);
  const auto s = beta_bound_check(kT25, 11);
  EXPECT_FALSE(s.holds);
  EXPECT_EQ(*s.failing_index, 1);
  EXPECT_EQ(4 * d_table(kT25, 11).values[1], Rational(-18, 11));
}

TEST(LBound, Examples) {
  EXPECT_EQ(l_upper_bound(kUnknot), 0);
  EXPECT_EQ(l_upper_bound(kTrefoil), 7);
  EXPECT_EQ(l_upper_bound(kT25), 11);
}

TEST(Obstruction, TrivialLattice) {
  DInvariantTable s3;
  s3.p = 1;
  s3.values = {Rational(0)};
  for (auto mode : {ObstructionMode::Global, ObstructionMode::Matching, ObstructionMode::Affine})
    EXPECT_TRUE(lattice_obstruction(GramLattice::diagonal({1}), s3, mode).pass);
}

TEST(Obstruction, LinearLatticeAgainstTorusKnotAndUnknot) {
  const auto L = linear_lattice(11, 4);
  for (auto mode : {ObstructionMode::Global, ObstructionMode::Matching, ObstructionMode::Affine}) {
    EXPECT_TRUE(lattice_obstruction(L, d_table(kT25, 11), mode).pass) << to_string(mode);
    EXPECT_FALSE(lattice_obstruction(L, d_table(kUnknot, 11), mode).pass) << to_string(mode);
  }
}

TEST(Obstruction, StandardLatticePassesAboveThreshold) {
  for (long n = 8; n < 30; ++n)
    EXPECT_TRUE(lattice_obstruction(GramLattice::standard(Integer(n), 3), d_table(kTrefoil, n), ObstructionMode::Global).pass);
}

TEST(Obstruction, Errors) {
  try {
    lattice_obstruction(linear_lattice(11, 4), d_table(kT25, 12), ObstructionMode::Global);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DeterminantMismatch);
  }
  DInvariantTable four;
  four.p = 4;
  four.values.assign(4, Rational(0));
  try {
    lattice_obstruction(GramLattice::diagonal({2, 2}), four, ObstructionMode::Affine);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonCyclicDiscriminant);
  }
}

TEST(Sharpness, RankOneThree) {
  // L(3,-1) = L(3,2): values {-1/2, 1/6, 1/6}, coset sharp values of <3>
  // are {(1-3)/4, (1-1/3)/4, (1-1/3)/4}.
  const auto t = d_lens_table(LensSpace::make(3, -1));
  RatVector sorted = t.values;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (RatVector{Rational(-1, 2), Rational(1, 6), Rational(1, 6)}));
  for (auto mode : {ObstructionMode::Global, ObstructionMode::Matching, ObstructionMode::Affine})
    EXPECT_TRUE(sharpness_check(GramLattice::diagonal({3}), t, mode).pass) << to_string(mode);
}

TEST(Sharpness, StandardLatticeIsNotSharpForTrefoil) {
  const auto t = d_table(kTrefoil, 5).reversed();
  EXPECT_FALSE(sharpness_check(GramLattice::standard(Integer(5), 2), t, ObstructionMode::Global).pass);
  EXPECT_TRUE(sharpness_check(GramLattice::standard(Integer(5), 2), d_table(kUnknot, 5).reversed(), ObstructionMode::Affine).pass);
}

TEST(Standardness, Branches) {
  const auto trefoil = knot("T(2,3)", torus_alexander(2, 3));
  EXPECT_EQ(standardness_verdict(trefoil, 9, GramLattice::standard(Integer(9), 2)).branch, StandardnessBranch::Standard);
  const auto r = standardness_verdict(trefoil, 9, linear_lattice(9, 2));
  EXPECT_EQ(r.branch, StandardnessBranch::ObstructionFail);
  EXPECT_LT(*r.obstruction.lattice_side, 2 + beta(9));
  const auto t25 = knot("T(2,5)", torus_alexander(2, 5));
  const auto s = standardness_verdict(t25, 11, linear_lattice(11, 4));
  EXPECT_EQ(s.branch, StandardnessBranch::Inconclusive);
  EXPECT_TRUE(s.square_free);
}

TEST(Unknot, Check) {
  EXPECT_TRUE(unknot_check(AlexanderPolynomial::make({{0, Integer(1)}})));
  EXPECT_FALSE(unknot_check(torus_alexander(2, 3)));
  EXPECT_FALSE(unknot_check(torus_alexander(2, 7)));
}

TEST(SlopeBound, Examples) {
  const auto r = slope_bound_check(knot("T(2,3)", torus_alexander(2, 3)), 5);
  EXPECT_FALSE(r.standard_sharpness.pass);
  EXPECT_TRUE(r.within_genus_bound);
  EXPECT_TRUE(r.consistent);
  const auto s = slope_bound_check(knot("T(2,5)", torus_alexander(2, 5)), 11);
  EXPECT_TRUE(s.within_genus_bound);
  EXPECT_TRUE(s.consistent);
  for (long n = 1; n < 15; ++n) {
    const auto u = slope_bound_check(knot("U", AlexanderPolynomial::make({{0, Integer(1)}})), n);
    EXPECT_TRUE(u.standard_sharpness.pass && u.consistent) << n;
  }
}

TEST(FractionalSlope, ConjugationShift) {
  const auto t = d_surgery_table(kTrefoil, 7, 2);
  EXPECT_EQ(t.conjugation_shift, 1);
  for (long i = 0; i < 7; ++i) EXPECT_EQ(t.values[static_cast<std::size_t>(i)], t.values[static_cast<std::size_t>(t.conjugate(i))]);
}
