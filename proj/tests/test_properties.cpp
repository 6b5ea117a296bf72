// Randomized properties with fixed seeds.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dehnlat/surgery.hpp"
#include "dehnlat/verify/corpus.hpp"
#include "dehnlat/verify/oracles.hpp"

using namespace dehnlat;

namespace {

std::vector<GramLattice> random_lattices(std::uint64_t seed, int count, int max_rank, int spread) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank(1, max_rank), off(-spread, spread), diag(1, spread + 2);
  std::vector<GramLattice> out;
  while (static_cast<int>(out.size()) < count) {
    const auto r = static_cast<std::size_t>(rank(rng));
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      g(i, i) = diag(rng);
      for (std::size_t j = i + 1; j < r; ++j) g(i, j) = g(j, i) = off(rng);
    }
    if (ldlt(to_rational(g)).positive_definite) out.push_back(GramLattice::make(g));
  }
  return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t r) {
  IntMatrix u = IntMatrix::identity(r);
  if (r < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, r - 1);
  std::uniform_int_distribution<int> k(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    const int f = k(rng);
    for (std::size_t j = 0; j < r; ++j) u(a, j) += f * u(b, j);
  }
  return u;
}

RatVector sorted_minima(const GramLattice& L) {
  RatVector v;
  for (const auto& c : char_coset_minima(L).cosets) v.push_back(c.minimum);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Properties, CharacteristicNormsCongruentModFourOverDelta) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> shift(-3, 3);
  for (const auto& L : random_lattices(101, 60, 4, 4)) {
    const auto mu = min_char_norm(L).value;
    const auto parity = characteristic_parity(L);
    for (int trial = 0; trial < 20; ++trial) {
      IntVector xi = parity;
      for (auto& x : xi) x += 2 * shift(rng);
      ASSERT_TRUE(is_characteristic(L, xi));
      const Rational diff = (dual_norm(L, xi) - mu) * Rational(L.det()) / 4;
      ASSERT_TRUE(is_integer(diff));
      ASSERT_GE(dual_norm(L, xi), mu);
    }
  }
}

TEST(Properties, CosetMinimaAreExhaustiveAndNegationSymmetric) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> shift(-4, 4);
  for (const auto& L : random_lattices(102, 60, 3, 4)) {
    const auto table = char_coset_minima(L);
    const CharCosetIndex index(L);
    ASSERT_EQ(Integer(static_cast<unsigned long>(table.cosets.size())), L.det());
    ASSERT_EQ(table.group.order, L.det());
    Rational overall = table.cosets[0].minimum;
    for (const auto& c : table.cosets) {
      ASSERT_EQ(c.minimum, table.cosets[table.negation[c.label]].minimum);
      ASSERT_EQ(index.label_of(c.witness.coords), c.label);
      ASSERT_EQ(dual_norm(L, c.witness.coords), c.minimum);
      overall = std::min(overall, c.minimum);
    }
    ASSERT_EQ(overall, min_char_norm(L).value);
    for (int trial = 0; trial < 30; ++trial) {
      IntVector xi = characteristic_parity(L);
      for (auto& x : xi) x += 2 * shift(rng);
      ASSERT_LE(table.cosets[index.label_of(xi)].minimum, dual_norm(L, xi));
    }
  }
}

TEST(Properties, BruteForceAgreesOnFreshRandomLattices) {
  for (const auto& L : random_lattices(103, 40, 3, 5)) {
    const auto brute = verify::oracle::brute_force_char_minima(verify::to_i64(L));
    EXPECT_EQ(min_char_norm(L).value, Rational(static_cast<long>(brute.min_numerator)) / L.det());
    EXPECT_EQ(static_cast<std::int64_t>(brute.coset_min.size()), L.det());
    for (const auto& c : char_coset_minima(L).cosets) {
      std::vector<std::int64_t> w;
      for (const auto& x : c.witness.coords) w.push_back(x.get_si());
      EXPECT_EQ(c.minimum, Rational(static_cast<long>(brute.coset_min.at(brute.key(w)))) / L.det());
    }
  }
}

TEST(Properties, InvariantUnderUnimodularChangeOfBasis) {
  std::mt19937_64 rng(13);
  for (const auto& L : random_lattices(104, 50, 4, 4)) {
    const IntMatrix u = random_unimodular(rng, L.rank());
    const auto M = GramLattice::make(u * L.gram() * u.transpose());
    ASSERT_EQ(M.det(), L.det());
    EXPECT_EQ(split_standard(M).standard, split_standard(L).standard);
    EXPECT_EQ(min_char_norm(M).value, min_char_norm(L).value);
    EXPECT_EQ(discriminant_group(M).invariant_factors, discriminant_group(L).invariant_factors);
    EXPECT_EQ(sorted_minima(M), sorted_minima(L));
  }
}

TEST(Properties, StandardLatticesInDisguiseAreRecognized) {
  std::mt19937_64 rng(14);
  for (long n = 1; n <= 12; ++n)
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto S = GramLattice::standard(Integer(n), r);
      const IntMatrix u = random_unimodular(rng, r);
      const auto v = split_standard(GramLattice::make(u * S.gram() * u.transpose()));
      EXPECT_TRUE(v.standard);
      EXPECT_EQ(v.delta, n);
    }
}

TEST(Properties, ModeDominance) {
  // affine pass => matching pass => global pass, for obstruction and sharpness.
  const auto vs = verify::oracle::admissible_v_sequences(3);
  for (long p = 2; p <= 19; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto L = linear_lattice(p, q);
      std::vector<DInvariantTable> tables;
      for (long q2 = 1; q2 < p; ++q2)
        if (std::gcd(p, q2) == 1) {
          tables.push_back(d_lens_table(LensSpace::make(p, q2)));
          tables.push_back(d_lens_table(LensSpace::make(p, q2)).reversed());
        }
      for (const auto& [v, g] : vs) {
        IntVector values(v.begin(), v.end());
        tables.push_back(d_table(VSequence::make(values, g), p));
      }
      for (const auto& t : tables) {
        const bool oa = lattice_obstruction(L, t, ObstructionMode::Affine).pass;
        const bool om = lattice_obstruction(L, t, ObstructionMode::Matching).pass;
        const bool og = lattice_obstruction(L, t, ObstructionMode::Global).pass;
        ASSERT_TRUE(!oa || om) << p << "," << q << " " << t.source;
        ASSERT_TRUE(!om || og) << p << "," << q << " " << t.source;
        const bool sa = sharpness_check(L, t, ObstructionMode::Affine).pass;
        const bool sm = sharpness_check(L, t, ObstructionMode::Matching).pass;
        const bool sg = sharpness_check(L, t, ObstructionMode::Global).pass;
        ASSERT_TRUE(!sa || sm) << p << "," << q << " " << t.source;
        ASSERT_TRUE(!sm || sg) << p << "," << q << " " << t.source;
      }
    }
}

TEST(Properties, AdmissibleSequencesMatchValidation) {
  // Every sequence with entries 0..3 and length <= g4 is accepted exactly
  // when it appears in the independent enumeration.
  const auto admissible = verify::oracle::admissible_v_sequences(6);
  for (std::int64_t g = 0; g <= 6; ++g) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(g));
    auto recurse = [&](auto&& self, std::size_t i) -> void {
      if (i == v.size()) {
        const bool expected = std::find(admissible.begin(), admissible.end(), std::make_pair(v, g)) != admissible.end();
        bool accepted = true;
        try {
          VSequence::make(IntVector(v.begin(), v.end()), g);
        } catch (const Error& e) {
          ASSERT_EQ(e.kind(), ErrorKind::VInvariantViolated);
          accepted = false;
        }
        ASSERT_EQ(accepted, expected) << "g4=" << g;
        return;
      }
      for (std::int64_t x = 0; x <= 3; ++x) {
        v[i] = x;
        self(self, i + 1);
      }
    };
    recurse(recurse, 0);
  }
}

TEST(Properties, TwoStrandTorusKnots) {
  for (long q = 3; q <= 15; q += 2) {
    const auto a = torus_alexander(2, q);
    const auto poly = verify::oracle::two_strand_alexander(q);
    for (const auto& [k, c] : poly) EXPECT_EQ(a.coefficient(k), c);
    KnotModel k;
    k.alexander = a;
    k.slice_genus = (q - 1) / 2;
    k.l_space = true;
    const auto vs = v_sequence(k);
    EXPECT_TRUE(vs.warnings.empty());
    EXPECT_EQ(vs.sequence.slice_genus(), (q - 1) / 2);
    // V_i = ceil((g - i)/2) for T(2,q).
    for (long i = 0; i < (q - 1) / 2; ++i) EXPECT_EQ(vs.sequence.at(i), ((q - 1) / 2 - i + 1) / 2);
    const auto t = d_table(vs.sequence, 2 * q);
    EXPECT_EQ(t.sum() - d_table(VSequence::make({}, 0), 2 * q).sum(), -Rational(delta_second_derivative(a)));
  }
}

TEST(Properties, SurgeryTablesAreSymmetric) {
  for (const auto& [v, g] : verify::oracle::admissible_v_sequences(5)) {
    const auto seq = VSequence::make(IntVector(v.begin(), v.end()), g);
    for (long n = 1; n <= 30; ++n) EXPECT_NO_THROW(d_table(seq, n));
    for (long p = 1; p <= 15; ++p)
      for (long q = 1; q <= 4; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const auto t = d_surgery_table(seq, p, q);
        for (long i = 0; i < p; ++i) ASSERT_EQ(t.values[static_cast<std::size_t>(i)], t.values[static_cast<std::size_t>(t.conjugate(i))]);
      }
  }
}
