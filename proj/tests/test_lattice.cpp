#include <gtest/gtest.h>

#include <algorithm>

#include "dehnlat/lattice.hpp"

using namespace dehnlat;

namespace {

const IntMatrix kLam11{{3, -1}, {-1, 4}};

std::vector<Rational> sorted_minima(const CharCosetTable& t) {
  std::vector<Rational> v;
  for (const auto& c : t.cosets) v.push_back(c.minimum);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(GramLattice, Validation) {
  EXPECT_NO_THROW(GramLattice::make(IntMatrix{{1}}));
  EXPECT_NO_THROW(GramLattice::make(kLam11));
  try {
    GramLattice::make(IntMatrix{{1, 2}, {2, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositiveDefinite);
  }
  try {
    GramLattice::make(IntMatrix{{1, 2}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(GramLattice, Determinants) {
  EXPECT_EQ(GramLattice::diagonal({1, 1, 1}).det(), 1);
  EXPECT_EQ(GramLattice::make(kLam11).det(), 11);
  EXPECT_EQ(GramLattice::standard(Integer(7), 4).det(), 7);
}

TEST(DiscriminantGroup, Examples) {
  EXPECT_TRUE(discriminant_group(GramLattice::diagonal({1, 1})).invariant_factors.empty());
  auto g = discriminant_group(GramLattice::make(kLam11));
  EXPECT_EQ(g.invariant_factors, (IntVector{11}));
  EXPECT_TRUE(g.cyclic());
  g = discriminant_group(GramLattice::diagonal({2, 2}));
  EXPECT_EQ(g.invariant_factors, (IntVector{2, 2}));
  EXPECT_FALSE(g.cyclic());
}

TEST(DualNorm, Examples) {
  EXPECT_EQ(dual_norm(GramLattice::diagonal({5}), {1}), Rational(1, 5));
  EXPECT_EQ(dual_norm(GramLattice::diagonal({1, 1, 1}), {1, 1, 1}), 3);
  EXPECT_EQ(dual_norm(GramLattice::make(kLam11), {1, 0}), Rational(4, 11));
}

TEST(ShiftedMin, ExamplesKeepTheCenterOnTies) {
  auto m = shifted_min(GramLattice::diagonal({3}), {1}, ShiftModulus::TwiceDual);
  EXPECT_EQ(m.value, Rational(1, 3));
  EXPECT_EQ(m.witness, (IntVector{1}));
  m = shifted_min(GramLattice::diagonal({1, 1}), {1, 1}, ShiftModulus::TwiceDual);
  EXPECT_EQ(m.value, 2);
  EXPECT_EQ(m.witness, (IntVector{1, 1}));
  m = shifted_min(GramLattice::make(kLam11), {1, 0}, ShiftModulus::TwiceDual);
  EXPECT_EQ(m.value, Rational(4, 11));
  EXPECT_EQ(m.witness, (IntVector{1, 0}));
}

TEST(MinCharNorm, Examples) {
  EXPECT_EQ(min_char_norm(GramLattice::diagonal({1, 1, 1, 1})).value, 4);
  EXPECT_EQ(min_char_norm(GramLattice::standard(Integer(7), 3)).value, Rational(15, 7));
  EXPECT_EQ(min_char_norm(GramLattice::standard(Integer(8), 3)).value, 2);
  EXPECT_EQ(min_char_norm(GramLattice::make(kLam11)).value, Rational(4, 11));
}

TEST(CharCosets, RankOneThree) {
  const auto L = GramLattice::diagonal({3});
  const auto t = char_coset_minima(L);
  ASSERT_EQ(t.cosets.size(), 3u);
  EXPECT_EQ(sorted_minima(t), (std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(3)}));
  // xi = 3 mod 6 is the self-conjugate coset with minimum 3.
  const CharCosetIndex index(L);
  const std::size_t fixed = index.label_of({3});
  EXPECT_EQ(t.cosets[fixed].minimum, 3);
  EXPECT_EQ(t.negation[fixed], fixed);
  EXPECT_EQ(t.negation[index.label_of({1})], index.label_of({5}));
}

TEST(CharCosets, UnitAndLinear) {
  EXPECT_EQ(char_coset_minima(GramLattice::diagonal({1})).cosets.size(), 1u);
  EXPECT_EQ(char_coset_minima(GramLattice::diagonal({1})).cosets[0].minimum, 1);
  const auto t = char_coset_minima(GramLattice::make(kLam11));
  EXPECT_EQ(t.cosets.size(), 11u);
  EXPECT_EQ(sorted_minima(t).front(), Rational(4, 11));
}

TEST(CharCosets, LabelsAreConsistent) {
  const auto L = GramLattice::make(IntMatrix{{2, 1, 0}, {1, 4, 1}, {0, 1, 6}});
  const CharCosetIndex index(L);
  for (std::size_t label = 0; label < index.size(); ++label) {
    const IntVector rep = index.representative(label);
    EXPECT_TRUE(is_characteristic(L, rep));
    EXPECT_EQ(index.label_of(rep), label);
    EXPECT_EQ(index.negation(index.negation(label)), label);
  }
}

TEST(SplitStandard, Examples) {
  auto v = split_standard(GramLattice::diagonal({1, 1, 1}));
  EXPECT_TRUE(v.standard);
  EXPECT_EQ(v.delta, 1);
  EXPECT_FALSE(split_standard(GramLattice::make(kLam11)).standard);
  v = split_standard(GramLattice::make(IntMatrix{{1, 1}, {1, 4}}));
  EXPECT_TRUE(v.standard);
  EXPECT_EQ(v.delta, 3);
  EXPECT_FALSE(split_standard(GramLattice::diagonal({2, 3})).standard);
}

TEST(OwensStrle, Examples) {
  auto r = owens_strle_check(GramLattice::diagonal({5}));
  EXPECT_EQ(r.minimum, Rational(1, 5));
  EXPECT_EQ(r.bound, Rational(1, 5));
  EXPECT_TRUE(r.equality && r.standard);
  r = owens_strle_check(GramLattice::make(kLam11));
  EXPECT_EQ(r.minimum, Rational(4, 11));
  EXPECT_EQ(r.bound, Rational(12, 11));
  EXPECT_FALSE(r.equality || r.standard);
  EXPECT_TRUE(r.congruent);
  r = owens_strle_check(GramLattice::diagonal({1, 1}));
  EXPECT_EQ(r.minimum, 2);
  EXPECT_EQ(r.bound, 2);
  EXPECT_TRUE(r.standard);
}

TEST(DirectSum, BlockDiagonal) {
  const auto s = direct_sum(GramLattice::make(kLam11), GramLattice::diagonal({1}));
  EXPECT_EQ(s.rank(), 3u);
  EXPECT_EQ(s.det(), 11);
  EXPECT_EQ(min_char_norm(s).value, Rational(4, 11) + 1);
}
