#pragma once

// Negative continued fractions, linear lattices and lens-space correction
// terms. L(p,q) is p/q surgery on the unknot; it bounds the positive
// definite linear plumbing with Gram matrix Lambda(p,q).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "lattice.hpp"

namespace dehnlat {

/// r = a_1 - 1/(a_2 - 1/(... - 1/a_k)).
struct NegContinuedFraction {
  IntVector coefficients;

  Rational value() const {
    if (coefficients.empty()) throw Error(ErrorKind::InvalidArgument, "empty continued fraction");
    Rational v = coefficients.back();
    for (std::size_t i = coefficients.size() - 1; i-- > 0;) v = Rational(coefficients[i]) - 1 / v;
    return v;
  }
};

inline void require_coprime(const Integer& p, const Integer& q) {
  if (gcd(p, q) != 1) throw Error(ErrorKind::NotCoprime, "gcd(" + p.get_str() + ", " + q.get_str() + ") != 1");
}

/// Ceiling expansion: a = ceil(p/q), then recurse on q / (a q - p).
inline NegContinuedFraction neg_continued_fraction(Integer p, Integer q) {
  if (p < 1 || q < 1) throw Error(ErrorKind::InvalidArgument, "continued fraction needs p, q >= 1");
  require_coprime(p, q);
  NegContinuedFraction cf;
  while (q != 0) {
    const Integer a = ceil(make_rational(p, q));
    cf.coefficients.push_back(a);
    Integer next = a * q - p;
    p = q;
    q = next;
  }
  return cf;
}

/// Tridiagonal Gram matrix with the expansion of p/q on the diagonal.
inline GramLattice linear_lattice(const Integer& p, const Integer& q) {
  if (!(p > q && q >= 1)) throw Error(ErrorKind::InvalidArgument, "linear lattice needs p > q >= 1");
  const auto cf = neg_continued_fraction(p, q);
  const std::size_t k = cf.coefficients.size();
  IntMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    g(i, i) = cf.coefficients[i];
    if (i + 1 < k) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return GramLattice::make(std::move(g));
}

enum class Orientation { Standard, Reversed };

/// L(p,q) with 0 < q < p (or L(1,0) = S^3); the reversed orientation is
/// -L(p,q) = L(p, p-q), whose correction terms are the negatives of those
/// of L(p,q) on the same labels.
struct LensSpace {
  std::int64_t p = 1;
  std::int64_t q = 0;
  Orientation orientation = Orientation::Standard;

  /// Normalizes an arbitrary coprime pair (q may be negative): L(p,q) and
  /// L(p, q mod p) are the same oriented manifold.
  static LensSpace make(std::int64_t p, std::int64_t q, Orientation orientation = Orientation::Standard) {
    if (p < 1) throw Error(ErrorKind::InvalidArgument, "lens space needs p >= 1");
    require_coprime(Integer(static_cast<long>(p)), Integer(static_cast<long>(q)));
    return LensSpace{p, mod(q, p), orientation};
  }

  LensSpace reversed() const {
    return LensSpace{p, q, orientation == Orientation::Standard ? Orientation::Reversed : Orientation::Standard};
  }
};

/// ((2i - n)^2 - n) / (4n).
inline Rational d_lens_n1(std::int64_t n, std::int64_t i) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (i < 0 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
  const Integer a = 2 * i - n;
  return make_rational(a * a - n, Integer(4 * n));
}

namespace detail {

// d(L(p,q), i) = ((2i+1-p-q)^2 - pq) / (4pq) - d(L(q, p mod q), i mod q),
// valid for any coprime p, q >= 1; L(1, *) is S^3.
inline Rational d_lens_recursive(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p == 1) return Rational(0);
  const Integer a = Integer(2 * i + 1) - p - q;
  const Integer pq = Integer(static_cast<long>(p)) * q;
  Rational head = make_rational(a * a - pq, 4 * pq);
  if (q == 1) return head;
  return head - d_lens_recursive(q, p % q, i % q);
}

}  // namespace detail

/// Correction term of L(p,q) (q >= 1 coprime to p, any size) at label i.
inline Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p < 1 || q < 0) throw Error(ErrorKind::InvalidArgument, "lens space needs p >= 1, q >= 0");
  require_coprime(Integer(static_cast<long>(p)), Integer(static_cast<long>(q)));
  if (i < 0 || i >= p) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 0.." + std::to_string(p - 1));
  if (p == 1) return Rational(0);
  return detail::d_lens_recursive(p, q, i);
}

inline Rational d_lens(const LensSpace& lens, std::int64_t i) {
  Rational d = d_lens(lens.p, lens.p == 1 ? 0 : lens.q, i);
  return lens.orientation == Orientation::Reversed ? Rational(-d) : d;
}

/// Exact correction terms indexed by spin-c labels 0..p-1. Spin-c
/// conjugation acts on labels by i -> (conjugation_shift - i) mod p.
struct DInvariantTable {
  std::int64_t p = 1;
  RatVector values;
  std::int64_t conjugation_shift = 0;
  std::string source;

  std::int64_t conjugate(std::int64_t i) const { return mod(conjugation_shift - i, p); }

  Rational minimum() const {
    Rational m = values.at(0);
    for (const auto& v : values)
      if (v < m) m = v;
    return m;
  }

  Rational sum() const {
    Rational s;
    for (const auto& v : values) s += v;
    return s;
  }

  /// Table of the same manifold with the opposite orientation.
  DInvariantTable reversed() const {
    DInvariantTable out = *this;
    for (auto& v : out.values) v = -v;
    out.source = "-(" + source + ")";
    return out;
  }
};

inline DInvariantTable d_lens_table(const LensSpace& lens) {
  DInvariantTable t;
  t.p = lens.p;
  t.conjugation_shift = mod(lens.q - 1, lens.p);
  t.values.reserve(static_cast<std::size_t>(lens.p));
  for (std::int64_t i = 0; i < lens.p; ++i) t.values.push_back(d_lens(lens, i));
  t.source = std::string(lens.orientation == Orientation::Reversed ? "-" : "") + "L(" + std::to_string(lens.p) + "," +
             std::to_string(lens.q) + ")";
  return t;
}

}  // namespace dehnlat
