#pragma once

// The acceptance checks. Each returns pass/fail plus a short detail line;
// failures name the first offending input.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "../knot.hpp"
#include "../lattice.hpp"
#include "../lens.hpp"
#include "../surgery.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

namespace dehnlat::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline AlexanderPolynomial to_alexander(const std::map<std::int64_t, std::int64_t>& poly) {
  std::map<std::int64_t, Integer> terms;
  for (const auto& [k, a] : poly) terms[k] = Integer(static_cast<long>(a));
  return AlexanderPolynomial::make(terms);
}

inline KnotModel torus_knot(std::int64_t p, std::int64_t q) {
  KnotModel k;
  k.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  k.alexander = torus_alexander(p, q);
  k.genus = (p - 1) * (q - 1) / 2;
  k.slice_genus = *k.genus;
  k.l_space = true;
  return k;
}

inline KnotModel unknot() {
  KnotModel k;
  k.name = "unknot";
  k.alexander = AlexanderPolynomial::make({{0, Integer(1)}});
  k.genus = 0;
  k.l_space = true;
  return k;
}

inline VSequence to_vsequence(const std::vector<std::int64_t>& v, std::int64_t g4) {
  IntVector values;
  for (auto x : v) values.push_back(Integer(static_cast<long>(x)));
  return VSequence::make(values, g4);
}

inline std::string show(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Runs `body`, turning library errors into a failed criterion.
inline CriterionResult guarded(int id, std::string title, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r{id, std::move(title), true, ""};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

inline void fail(CriterionResult& r, const std::string& why) {
  if (r.pass) r.detail = why;
  r.pass = false;
}

}  // namespace detail

inline CriterionResult lens_closed_form() {
  return detail::guarded(1, "lens closed form for L(n,1), n <= 200", [](CriterionResult& r) {
    std::int64_t checked = 0;
    for (std::int64_t n = 1; n <= 200; ++n)
      for (std::int64_t i = 0; i < n; ++i) {
        const Rational expect = oracle::lens_n1(n, i);
        if (d_lens(n, n == 1 ? 0 : 1, i) != expect || d_lens_n1(n, i) != expect) {
          detail::fail(r, "mismatch at n=" + std::to_string(n) + " i=" + std::to_string(i));
          return;
        }
        ++checked;
      }
    r.detail = std::to_string(checked) + " values";
  });
}

inline CriterionResult owens_strle_corpus(const std::vector<CorpusEntry>& corpus) {
  return detail::guarded(2, "characteristic bound over the lattice corpus", [&](CriterionResult& r) {
    std::size_t standard = 0;
    for (const auto& e : corpus) {
      OwensStrleReport rep;
      try {
        rep = owens_strle_check(e.lattice);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::AssertionViolated) throw;
        detail::fail(r, e.name + ": " + err.what());
        return;
      }
      if (rep.standard != oracle_standard(e)) {
        detail::fail(r, e.name + ": standardness disagrees with the unit-vector count");
        return;
      }
      standard += rep.standard;
    }
    r.detail = std::to_string(corpus.size()) + " lattices, " + std::to_string(standard) + " standard";
  });
}

inline CriterionResult enumeration_oracle(const std::vector<CorpusEntry>& corpus) {
  return detail::guarded(3, "shifted minima against box brute force, rank <= 4", [&](CriterionResult& r) {
    std::size_t lattices = 0, cosets = 0;
    for (const auto& e : corpus) {
      if (e.lattice.rank() > 4) continue;
      const auto g = to_i64(e.lattice);
      const auto brute = oracle::brute_force_char_minima(g);
      const Rational det(static_cast<long>(brute.det));

      const auto global = shifted_min(e.lattice, characteristic_parity(e.lattice), ShiftModulus::TwiceDual);
      if (global.value != Rational(static_cast<long>(brute.min_numerator)) / det) {
        detail::fail(r, e.name + ": characteristic minimum " + to_string(global.value) + " vs brute force");
        return;
      }
      if (static_cast<std::int64_t>(brute.coset_min.size()) != brute.det) {
        detail::fail(r, e.name + ": brute force met " + std::to_string(brute.coset_min.size()) + " cosets");
        return;
      }
      const auto table = char_coset_minima(e.lattice);
      const CharCosetIndex index(e.lattice);
      std::map<oracle::CosetKey, std::size_t> seen;
      for (const auto& c : table.cosets) {
        std::vector<std::int64_t> w;
        for (const auto& x : c.witness.coords) w.push_back(x.get_si());
        const auto key = brute.key(w);
        std::vector<std::int64_t> rep;
        for (const auto& x : index.representative(c.label)) rep.push_back(x.get_si());
        if (!is_characteristic(e.lattice, c.witness.coords) || key != brute.key(rep) || !seen.emplace(key, c.label).second) {
          detail::fail(r, e.name + ": coset " + std::to_string(c.label) + " witness is not in its coset");
          return;
        }
        if (c.minimum != Rational(static_cast<long>(brute.coset_min.at(key))) / det) {
          detail::fail(r, e.name + ": coset " + std::to_string(c.label) + " minimum " + to_string(c.minimum) + " vs brute force");
          return;
        }
        ++cosets;
      }
      ++lattices;
    }
    r.detail = std::to_string(lattices) + " lattices, " + std::to_string(cosets) + " cosets";
  });
}

inline CriterionResult beta_bound_sweep() {
  return detail::guarded(4, "beta bound above 4 g4 + 3 for every admissible V, g4 <= 6", [](CriterionResult& r) {
    std::size_t cases = 0;
    const auto all = oracle::admissible_v_sequences(6);
    for (const auto& [v, g4] : all) {
      const VSequence seq = detail::to_vsequence(v, g4);
      for (std::int64_t n = 4 * g4 + 4; n <= 4 * g4 + 40; ++n) {
        const auto res = beta_bound_check(seq, n);
        if (!res.holds) {
          detail::fail(r, "V=" + detail::show(v) + " n=" + std::to_string(n) + " fails at i=" + std::to_string(*res.failing_index));
          return;
        }
        ++cases;
      }
    }
    r.detail = std::to_string(all.size()) + " sequences, " + std::to_string(cases) + " slopes";
  });
}

inline CriterionResult l_bound_family() {
  return detail::guarded(5, "l-bound of the unknot and of T(2,q), q = 3,5,7", [](CriterionResult& r) {
    const auto u = l_upper_bound(v_sequence(detail::unknot()).sequence);
    if (u != 0) detail::fail(r, "unknot bound " + std::to_string(u));
    std::string seen = "unknot 0";
    for (std::int64_t q : {3, 5, 7}) {
      const auto vs = v_sequence(detail::torus_knot(2, q)).sequence;
      const auto b = l_upper_bound(vs);
      if (b != 2 * q + 1 || b != genus_threshold(vs)) detail::fail(r, "T(2," + std::to_string(q) + ") bound " + std::to_string(b));
      seen += ", T(2," + std::to_string(q) + ") " + std::to_string(b);
    }
    if (r.pass) r.detail = seen;
  });
}

inline CriterionResult trefoil_negative_control(const std::vector<CorpusEntry>& corpus) {
  return detail::guarded(6, "trefoil slopes 8..20: non-standard corpus lattices obstructed", [&](CriterionResult& r) {
    const auto vs = v_sequence(detail::torus_knot(2, 3)).sequence;
    std::size_t nonstandard = 0, standard = 0;
    for (std::int64_t n = 8; n <= 20; ++n) {
      const auto table = d_table(vs, n, "T(2,3)");
      for (const auto& e : corpus) {
        if (e.lattice.det() != n) continue;
        const bool is_std = oracle_standard(e);
        const auto rep = lattice_obstruction(e.lattice, table, ObstructionMode::Global);
        if (rep.pass != is_std) {
          detail::fail(r, e.name + " at n=" + std::to_string(n) + (is_std ? ": standard lattice obstructed" : ": non-standard lattice passes"));
          return;
        }
        (is_std ? standard : nonstandard)++;
      }
    }
    r.detail = std::to_string(nonstandard) + " non-standard obstructed, " + std::to_string(standard) + " standard pass";
  });
}

inline CriterionResult linear_sharpness() {
  return detail::guarded(7, "linear lattices are sharp for -L(p,q), p <= 30", [](CriterionResult& r) {
    std::size_t count = 0;
    for (const auto& e : linear_corpus(30)) {
      const auto table = d_lens_table(LensSpace::make(e.p, e.q)).reversed();
      if (!sharpness_check(e.lattice, table, ObstructionMode::Matching).pass) {
        detail::fail(r, e.name + " is not sharp");
        return;
      }
      ++count;
    }
    r.detail = std::to_string(count) + " lattices";
  });
}

inline CriterionResult torus_lens_identification() {
  return detail::guarded(8, "T(2,n) at slope 2n+1 matches L(2n+1,4), n = 3,5,7", [](CriterionResult& r) {
    for (std::int64_t n : {3, 5, 7}) {
      const std::int64_t p = 2 * n + 1;
      const auto table = d_table(v_sequence(detail::torus_knot(2, n)).sequence, p, "T(2," + std::to_string(n) + ")");
      RatVector a = table.values, b;
      for (std::int64_t i = 0; i < p; ++i) b.push_back(d_lens(p, 4, i));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        detail::fail(r, "multisets differ for n=" + std::to_string(n));
        return;
      }
      const GramLattice lam = linear_lattice(Integer(static_cast<long>(p)), Integer(4));
      const auto sharp = sharpness_check(lam, table.reversed(), ObstructionMode::Affine);
      const auto obstruction = lattice_obstruction(lam, table, ObstructionMode::Affine);
      if (!sharp.pass || !sharp.affine || !obstruction.pass) {
        detail::fail(r, "no affine witness for n=" + std::to_string(n));
        return;
      }
      r.detail += (r.detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " psi(i)=" +
                  std::to_string(sharp.affine->base) + "+" + std::to_string(sharp.affine->step) + "i";
    }
  });
}

inline CriterionResult casson_shadow() {
  return detail::guarded(9, "sum of correction terms and standard-lattice sharpness", [](CriterionResult& r) {
    std::size_t pairs = 0;
    for (const auto& [v, g4] : oracle::admissible_v_sequences(6)) {
      const VSequence seq = detail::to_vsequence(v, g4);
      for (std::int64_t n = 1; n <= 4 * g4 + 40; ++n) {
        Rational lens_sum;
        for (std::int64_t i = 0; i < n; ++i) lens_sum += oracle::lens_n1(n, i);
        const Rational lhs = d_table(seq, n).sum() - lens_sum;
        if (lhs != Rational(-2 * oracle::max_v_sum(v, n))) {
          detail::fail(r, "V=" + detail::show(v) + " n=" + std::to_string(n));
          return;
        }
        ++pairs;
      }
    }
    std::size_t knots = 0;
    for (std::int64_t p = 2; p <= 5; ++p)
      for (std::int64_t q = p + 1; (p - 1) * (q - 1) / 2 <= 12; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const auto poly = oracle::torus_alexander(p, q);
        const auto knot = detail::torus_knot(p, q);
        if (knot.alexander->terms() != detail::to_alexander(poly).terms()) {
          detail::fail(r, knot.name + ": Alexander polynomial disagrees with the semigroup oracle");
          return;
        }
        const auto seq = v_sequence(knot).sequence;
        const std::int64_t deg = poly.rbegin()->first;
        for (std::int64_t n = 2 * deg; n <= 2 * deg + 12; ++n) {
          if (n < 1) continue;
          Rational lens_sum;
          for (std::int64_t i = 0; i < n; ++i) lens_sum += oracle::lens_n1(n, i);
          if (d_table(seq, n).sum() - lens_sum != Rational(-oracle::second_derivative_at_one(poly))) {
            detail::fail(r, knot.name + " n=" + std::to_string(n) + ": sum differs from -Delta''(1)");
            return;
          }
        }
        ++knots;
      }
    for (std::int64_t q : {3, 5}) {
      const auto knot = detail::torus_knot(2, q);
      for (std::int64_t n = 5; n <= 11; ++n) {
        const auto rep = slope_bound_check(knot, n);
        if (rep.standard_sharpness.pass || !rep.consistent) {
          detail::fail(r, knot.name + " n=" + std::to_string(n) + ": standard lattice is sharp");
          return;
        }
      }
    }
    r.detail = std::to_string(pairs) + " (V,n) pairs, " + std::to_string(knots) + " torus knots";
  });
}

inline CriterionResult delta_identity() {
  return detail::guarded(10, "Delta''(1) = 2 sum t_i for T(2,q), q <= 15", [](CriterionResult& r) {
    for (std::int64_t q = 3; q <= 15; q += 2) {
      const auto poly = oracle::two_strand_alexander(q);
      const auto lib = torus_alexander(2, q);
      if (lib.terms() != detail::to_alexander(poly).terms()) {
        detail::fail(r, "T(2," + std::to_string(q) + ") Alexander polynomial");
        return;
      }
      // Sum over all of Z with t_{-i} = t_i.
      const auto t = oracle::torsion(poly);
      std::int64_t sum = t[0];
      for (std::size_t i = 1; i < t.size(); ++i) sum += 2 * t[i];
      if (delta_second_derivative(lib) != 2 * sum || oracle::second_derivative_at_one(poly) != 2 * sum) {
        detail::fail(r, "T(2," + std::to_string(q) + ")");
        return;
      }
    }
    r.detail = "q = 3..15";
  });
}

inline std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {}) {
  const auto corpus = lattice_corpus();
  std::vector<std::function<CriterionResult()>> checks = {
      [] { return lens_closed_form(); },
      [&] { return owens_strle_corpus(corpus); },
      [&] { return enumeration_oracle(corpus); },
      [] { return beta_bound_sweep(); },
      [] { return l_bound_family(); },
      [&] { return trefoil_negative_control(corpus); },
      [] { return linear_sharpness(); },
      [] { return torus_lens_identification(); },
      [] { return casson_shadow(); },
      [] { return delta_identity(); },
  };
  std::vector<CriterionResult> out;
  for (const auto& c : checks) {
    out.push_back(c());
    if (on_result) on_result(out.back());
  }
  return out;
}

inline std::string format(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title +
         (r.detail.empty() ? "" : " [" + r.detail + "]");
}

}  // namespace dehnlat::verify
