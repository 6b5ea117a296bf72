#pragma once

// Correction terms of surgeries on knots and the lattice obstructions they
// impose on definite fillings.
//
// For a positive definite filling X of Y with form L, every characteristic
// covector xi restricting to the spin-c structure t satisfies
//     Q*(xi, xi) >= rank(L) + 4 d(Y, t),
// and a negative definite filling with form -L is sharp when
//     d(Y, t) = (rank(L) - min Q*) / 4   for every t.
// Spin-c structures of Y correspond to the det(L) cosets of 2L in char(L).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "knot.hpp"
#include "lattice.hpp"
#include "lens.hpp"

namespace dehnlat {

/// 1/n - 1 for odd n, -1 for even n.
inline Rational beta(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "beta needs n >= 1");
  if (n % 2 == 0) return Rational(-1);
  return make_rational(1, Integer(static_cast<long>(n))) - 1;
}

/// d(S^3_{p/q}(K), i) = d(L(p,q), i) - 2 max(V_{floor(i/q)}, V_{floor((p+q-1-i)/q)}).
inline Rational d_surgery(const VSequence& v, std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p < 1 || q < 1) throw Error(ErrorKind::InvalidArgument, "surgery slope needs p, q >= 1");
  if (i < 0 || i >= p) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 0.." + std::to_string(p - 1));
  const Integer m = std::max(v.at(i / q), v.at((p + q - 1 - i) / q));
  return d_lens(p, p == 1 ? 0 : q, i) - 2 * Rational(m);
}

/// Table for the slope p/q; labels for q > 1 are formula-level indices.
inline DInvariantTable d_surgery_table(const VSequence& v, std::int64_t p, std::int64_t q, const std::string& name = "K") {
  DInvariantTable t;
  t.p = p;
  t.conjugation_shift = mod(q - 1, p);
  t.values.reserve(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) t.values.push_back(d_surgery(v, p, q, i));
  t.source = "S^3_" + std::to_string(p) + (q == 1 ? "" : "/" + std::to_string(q)) + "(" + name + ")";
  return t;
}

/// Integer surgery table; enforces d(i) = d(n - i).
inline DInvariantTable d_table(const VSequence& v, std::int64_t n, const std::string& name = "K") {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "slope must be positive");
  DInvariantTable t = d_surgery_table(v, n, 1, name);
  for (std::int64_t i = 0; i < n; ++i) {
    if (t.values[static_cast<std::size_t>(i)] != t.values[static_cast<std::size_t>(t.conjugate(i))]) {
      throw Error(ErrorKind::AssertionViolated, "surgery table is not conjugation symmetric at " + std::to_string(i));
    }
  }
  return t;
}

struct BetaBoundResult {
  bool holds = true;
  std::optional<std::int64_t> failing_index;  // first i with 4 d(i) < beta(n)
  Rational beta;
  Rational min_four_d;
};

inline BetaBoundResult beta_bound_check(const VSequence& v, std::int64_t n) {
  const DInvariantTable t = d_table(v, n);
  BetaBoundResult r;
  r.beta = beta(n);
  r.min_four_d = 4 * t.minimum();
  for (std::int64_t i = 0; i < n; ++i) {
    if (4 * t.values[static_cast<std::size_t>(i)] < r.beta) {
      r.holds = false;
      r.failing_index = i;
      break;
    }
  }
  return r;
}

inline std::int64_t genus_threshold(const VSequence& v) { return 4 * v.slice_genus() + 3; }

/// Slopes n in [1, 4 g4 + 3] at which the beta bound fails.
inline std::vector<std::int64_t> beta_failing_slopes(const VSequence& v) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= genus_threshold(v); ++n)
    if (!beta_bound_check(v, n).holds) out.push_back(n);
  return out;
}

/// Largest slope where the d-invariant obstruction cannot rule out a
/// non-standard lattice; an upper bound for l(K), 0 if there is none.
inline std::int64_t l_upper_bound(const VSequence& v) {
  const auto failing = beta_failing_slopes(v);
  return failing.empty() ? 0 : failing.back();
}

enum class ObstructionMode { Global, Matching, Affine };

inline std::string to_string(ObstructionMode mode) {
  switch (mode) {
    case ObstructionMode::Global: return "global";
    case ObstructionMode::Matching: return "matching";
    case ObstructionMode::Affine: return "affine";
  }
  return "?";
}

inline ObstructionMode parse_mode(const std::string& text) {
  if (text == "global") return ObstructionMode::Global;
  if (text == "matching") return ObstructionMode::Matching;
  if (text == "affine") return ObstructionMode::Affine;
  throw Error(ErrorKind::InvalidArgument, "unknown mode '" + text + "'");
}

struct AffineWitness {
  std::size_t base = 0;  // label of psi(0)
  std::size_t step = 0;  // label increment per index
};

struct ObstructionReport {
  std::string check;  // "obstruction" or "sharpness"
  ObstructionMode mode = ObstructionMode::Global;
  bool pass = false;
  std::size_t rank = 0;
  Integer determinant;
  std::vector<std::size_t> assignment;  // coset label per spin-c index
  std::optional<AffineWitness> affine;
  std::optional<std::int64_t> failing_index;
  std::optional<std::size_t> failing_coset;
  std::optional<Rational> lattice_side;  // global mode comparison
  std::optional<Rational> table_side;
  std::vector<Rational> coset_minima;
  std::string detail;
};

namespace detail {

// Coset c may serve index i.
using PairPredicate = std::function<bool(std::int64_t, std::size_t)>;

struct Orbit {
  std::int64_t first;
  std::int64_t second;  // == first for fixed points
};

inline std::vector<Orbit> index_orbits(const DInvariantTable& t) {
  std::vector<Orbit> out;
  for (std::int64_t i = 0; i < t.p; ++i) {
    const std::int64_t j = t.conjugate(i);
    if (j >= i) out.push_back({i, j});
  }
  return out;
}

inline std::vector<Orbit> coset_orbits(const CharCosetTable& c) {
  std::vector<Orbit> out;
  for (std::size_t a = 0; a < c.cosets.size(); ++a) {
    const std::size_t b = c.negation[a];
    if (b >= a) out.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  }
  return out;
}

// Kuhn's augmenting paths on orbits; index orbit -> coset orbit, with the
// orientation (which coset of a pair serves `first`) remembered.
inline std::optional<std::vector<std::size_t>> involutive_matching(const DInvariantTable& t, const CharCosetTable& cosets,
                                                                   const PairPredicate& ok, std::int64_t& unmatched) {
  const auto left = index_orbits(t);
  const auto right = coset_orbits(cosets);
  unmatched = -1;

  auto orientation = [&](const Orbit& io, const Orbit& co) -> int {
    const bool fixed_i = io.first == io.second;
    const bool fixed_c = co.first == co.second;
    if (fixed_i != fixed_c) return -1;
    const auto a = static_cast<std::size_t>(co.first);
    const auto b = static_cast<std::size_t>(co.second);
    if (fixed_i) return ok(io.first, a) ? 0 : -1;
    if (ok(io.first, a) && ok(io.second, b)) return 0;
    if (ok(io.first, b) && ok(io.second, a)) return 1;
    return -1;
  };

  std::vector<std::vector<std::pair<std::size_t, int>>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (int o = orientation(left[i], right[j]); o >= 0) adj[i].push_back({j, o});

  std::vector<std::ptrdiff_t> owner(right.size(), -1);
  std::vector<int> owner_orientation(right.size(), 0);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (const auto& [j, o] : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]))) {
        owner[j] = static_cast<std::ptrdiff_t>(i);
        owner_orientation[j] = o;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left.size(); ++i) {
    seen.assign(right.size(), 0);
    if (!augment(i)) {
      unmatched = left[i].first;
      return std::nullopt;
    }
  }
  if (left.size() != right.size()) return std::nullopt;

  std::vector<std::size_t> psi(static_cast<std::size_t>(t.p));
  for (std::size_t j = 0; j < right.size(); ++j) {
    const Orbit& io = left[static_cast<std::size_t>(owner[j])];
    auto a = static_cast<std::size_t>(right[j].first);
    auto b = static_cast<std::size_t>(right[j].second);
    if (owner_orientation[j] == 1) std::swap(a, b);
    psi[static_cast<std::size_t>(io.first)] = a;
    psi[static_cast<std::size_t>(io.second)] = b;
  }
  return psi;
}

// psi(i) = base + i * step in Z/delta, conjugation equivariant.
inline std::optional<std::pair<AffineWitness, std::vector<std::size_t>>> affine_family(const DInvariantTable& t,
                                                                                        const CharCosetTable& cosets,
                                                                                        const PairPredicate& ok) {
  const std::size_t delta = cosets.cosets.size();
  auto unit = [&](std::size_t g) { return std::gcd(g, delta) == 1 || delta == 1; };
  std::vector<std::size_t> psi(delta);
  for (std::size_t step = 0; step < std::max<std::size_t>(delta, 1); ++step) {
    if (!unit(step) || (delta > 1 && step == 0)) continue;
    for (std::size_t base = 0; base < delta; ++base) {
      bool good = true;
      for (std::size_t i = 0; i < delta && good; ++i) psi[i] = (base + i * step) % delta;
      for (std::size_t i = 0; i < delta && good; ++i) {
        good = cosets.negation[psi[i]] == psi[static_cast<std::size_t>(t.conjugate(static_cast<std::int64_t>(i)))] &&
               ok(static_cast<std::int64_t>(i), psi[i]);
      }
      if (good) return std::make_pair(AffineWitness{base, step}, psi);
    }
  }
  return std::nullopt;
}

inline void require_matching_sizes(const GramLattice& lattice, const DInvariantTable& t) {
  if (lattice.det() != t.p) {
    throw Error(ErrorKind::DeterminantMismatch,
                "det(L) = " + lattice.det().get_str() + " but the table has " + std::to_string(t.p) + " spin-c structures");
  }
}

inline ObstructionReport run_bijection_modes(ObstructionReport rep, const GramLattice& lattice, const DInvariantTable& t,
                                             const CharCosetTable& cosets, const PairPredicate& ok) {
  if (rep.mode == ObstructionMode::Matching) {
    std::int64_t unmatched = -1;
    if (auto psi = involutive_matching(t, cosets, ok, unmatched)) {
      rep.pass = true;
      rep.assignment = std::move(*psi);
      rep.detail = "conjugation-equivariant bijection found";
    } else {
      rep.pass = false;
      if (unmatched >= 0) rep.failing_index = unmatched;
      rep.detail = "no conjugation-equivariant bijection";
    }
    return rep;
  }
  if (!cosets.group.cyclic()) {
    throw Error(ErrorKind::NonCyclicDiscriminant, "affine mode needs a cyclic discriminant group");
  }
  (void)lattice;
  if (auto found = affine_family(t, cosets, ok)) {
    rep.pass = true;
    rep.affine = found->first;
    rep.assignment = std::move(found->second);
    rep.detail = "affine identification psi(i) = " + std::to_string(rep.affine->base) + " + " +
                 std::to_string(rep.affine->step) + " i";
  } else {
    rep.pass = false;
    rep.detail = "no affine conjugation-equivariant identification";
  }
  return rep;
}

}  // namespace detail

/// Necessary condition for L to be the form of a positive definite filling
/// of a manifold with correction terms `table`.
inline ObstructionReport lattice_obstruction(const GramLattice& lattice, const DInvariantTable& table, ObstructionMode mode) {
  detail::require_matching_sizes(lattice, table);
  ObstructionReport rep;
  rep.check = "obstruction";
  rep.mode = mode;
  rep.rank = lattice.rank();
  rep.determinant = lattice.det();
  const Rational rank(static_cast<long>(lattice.rank()));

  if (mode == ObstructionMode::Global) {
    const auto mu = min_char_norm(lattice);
    const Rational rhs = rank + 4 * table.minimum();
    rep.lattice_side = mu.value;
    rep.table_side = rhs;
    rep.pass = mu.value >= rhs;
    if (!rep.pass) {
      const auto it = std::min_element(table.values.begin(), table.values.end());
      rep.failing_index = it - table.values.begin();
      rep.failing_coset = CharCosetIndex(lattice).label_of(mu.witness.coords);
    }
    rep.detail = "min char norm " + to_string(mu.value) + (rep.pass ? " >= " : " < ") + "rank + 4 min d = " + to_string(rhs);
    return rep;
  }

  const CharCosetTable cosets = char_coset_minima(lattice);
  for (const auto& c : cosets.cosets) rep.coset_minima.push_back(c.minimum);
  detail::PairPredicate ok = [&](std::int64_t i, std::size_t c) {
    return cosets.cosets[c].minimum >= rank + 4 * table.values[static_cast<std::size_t>(i)];
  };
  return detail::run_bijection_modes(std::move(rep), lattice, table, cosets, ok);
}

/// Whether -L is a sharp negative definite filling of the manifold whose
/// correction terms are `table`: (rank - m(psi(i))) / 4 = table[i] for all i.
/// Global mode compares the two multisets.
inline ObstructionReport sharpness_check(const GramLattice& lattice, const DInvariantTable& table, ObstructionMode mode) {
  detail::require_matching_sizes(lattice, table);
  ObstructionReport rep;
  rep.check = "sharpness";
  rep.mode = mode;
  rep.rank = lattice.rank();
  rep.determinant = lattice.det();
  const Rational rank(static_cast<long>(lattice.rank()));
  const CharCosetTable cosets = char_coset_minima(lattice);
  for (const auto& c : cosets.cosets) rep.coset_minima.push_back(c.minimum);
  auto sharp_value = [&](std::size_t c) -> Rational { return (rank - cosets.cosets[c].minimum) / 4; };

  if (mode == ObstructionMode::Global) {
    RatVector lhs, rhs = table.values;
    for (std::size_t c = 0; c < cosets.cosets.size(); ++c) lhs.push_back(sharp_value(c));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    rep.pass = lhs == rhs;
    if (!rep.pass) {
      for (std::size_t k = 0; k < lhs.size(); ++k)
        if (lhs[k] != rhs[k]) {
          rep.lattice_side = lhs[k];
          rep.table_side = rhs[k];
          break;
        }
    }
    rep.detail = rep.pass ? "sharp values and correction terms agree as multisets"
                          : "sharp values and correction terms differ as multisets";
    return rep;
  }

  detail::PairPredicate ok = [&](std::int64_t i, std::size_t c) {
    return sharp_value(c) == table.values[static_cast<std::size_t>(i)];
  };
  return detail::run_bijection_modes(std::move(rep), lattice, table, cosets, ok);
}

enum class StandardnessBranch { Standard, ObstructionFail, Violation, Inconclusive };

inline std::string to_string(StandardnessBranch b) {
  switch (b) {
    case StandardnessBranch::Standard: return "standard";
    case StandardnessBranch::ObstructionFail: return "obstruction-fail";
    case StandardnessBranch::Violation: return "violation";
    case StandardnessBranch::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct StandardnessReport {
  std::int64_t slope = 0;
  std::int64_t threshold = 0;  // 4 g4 + 3
  StandardnessBranch branch = StandardnessBranch::Inconclusive;
  ObstructionReport obstruction;
  StandardVerdict split;
  bool square_free = false;
  std::vector<std::string> warnings;
};

/// Above 4 g4 + 3 any lattice bounded by n-surgery is standard: either the
/// global obstruction rejects L or L splits as <1>^{r-1} (+) <n>.
inline StandardnessReport standardness_verdict(const KnotModel& knot, std::int64_t n, const GramLattice& lattice) {
  auto vs = v_sequence(knot);
  const DInvariantTable table = d_table(vs.sequence, n, knot.name);
  StandardnessReport rep;
  rep.slope = n;
  rep.threshold = genus_threshold(vs.sequence);
  rep.warnings = std::move(vs.warnings);
  rep.square_free = is_square_free(n);
  rep.obstruction = lattice_obstruction(lattice, table, ObstructionMode::Global);
  rep.split = split_standard(lattice);
  const bool standard = rep.split.standard && rep.split.delta == n;
  if (n <= rep.threshold) {
    rep.branch = StandardnessBranch::Inconclusive;
  } else if (!rep.obstruction.pass) {
    rep.branch = StandardnessBranch::ObstructionFail;
  } else if (standard) {
    rep.branch = StandardnessBranch::Standard;
  } else {
    rep.branch = StandardnessBranch::Violation;
  }
  return rep;
}

/// For an L-space knot: Delta''(1) = 0 exactly for the unknot.
inline bool unknot_check(const AlexanderPolynomial& delta) { return delta_second_derivative(delta) == 0; }

struct SlopeBoundReport {
  std::int64_t slope = 0;
  bool unknot = false;
  ObstructionReport standard_sharpness;
  std::int64_t l_bound = 0;
  std::int64_t genus_bound = 0;
  bool within_l_bound = false;
  bool within_genus_bound = false;
  bool consistent = false;
  std::vector<std::string> warnings;
};

/// The knot is taken with positive L-space slopes; the slope n refers to
/// -n surgery on its mirror, i.e. -S^3_n(K), which the standard lattice <n>
/// fills sharply only when K is the unknot.
inline SlopeBoundReport slope_bound_check(const KnotModel& knot, std::int64_t n) {
  if (!knot.l_space || !knot.alexander) throw Error(ErrorKind::InvalidArgument, "slope bound check needs an L-space knot with Alexander polynomial");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "slope must be positive");
  auto vs = v_sequence(knot);
  SlopeBoundReport rep;
  rep.slope = n;
  rep.warnings = std::move(vs.warnings);
  rep.unknot = unknot_check(*knot.alexander);
  const DInvariantTable table = d_table(vs.sequence, n, knot.name).reversed();
  rep.standard_sharpness = sharpness_check(GramLattice::standard(Integer(static_cast<long>(n)), 1), table, ObstructionMode::Matching);
  rep.l_bound = l_upper_bound(vs.sequence);
  rep.genus_bound = genus_threshold(vs.sequence);
  rep.within_l_bound = n <= rep.l_bound;
  rep.within_genus_bound = n <= rep.genus_bound;
  rep.consistent = rep.unknot ? rep.standard_sharpness.pass : !rep.standard_sharpness.pass;
  return rep;
}

}  // namespace dehnlat
