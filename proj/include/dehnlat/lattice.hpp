#pragma once

// Positive definite integral lattices given by Gram matrices, their duals,
// characteristic covectors and the standardness question
//     L  ~=  <1>^{r-1} (+) <delta>.
//
// Covectors are integer vectors in the dual basis: xi pairs with v in L by
// the dot product, Q*(xi, eta) = xi^T G^{-1} eta, and xi is characteristic
// iff xi_k = G_kk (mod 2) for every k.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace dehnlat {

class GramLattice {
 public:
  /// Validates symmetry and certifies positive definiteness by exact LDL^T.
  static GramLattice make(IntMatrix gram) {
    if (gram.rows() == 0) throw Error(ErrorKind::InvalidArgument, "empty Gram matrix");
    if (!gram.square()) throw Error(ErrorKind::InvalidArgument, "Gram matrix is not square");
    if (!is_symmetric(gram)) throw Error(ErrorKind::NotSymmetric, "Gram matrix is not symmetric");
    auto data = std::make_shared<Data>();
    data->factor = ldlt(to_rational(gram));
    if (!data->factor.positive_definite) {
      throw Error(ErrorKind::NotPositiveDefinite,
                  "pivot " + std::to_string(data->factor.pivots.size()) + " of LDL^T is " +
                      to_string(data->factor.pivots.back()));
    }
    data->gram = std::move(gram);
    data->det = determinant(data->gram);
    data->inverse = inverse(data->gram);
    build_chains(*data);
    return GramLattice(std::move(data));
  }

  static GramLattice diagonal(const IntVector& entries) {
    IntMatrix g(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
    return make(std::move(g));
  }

  /// <1>^{rank-1} (+) <delta>, with the <delta> summand last.
  static GramLattice standard(const Integer& delta, std::size_t rank) {
    IntVector entries(rank, Integer(1));
    entries.back() = delta;
    return diagonal(entries);
  }

  std::size_t rank() const { return data_->gram.rows(); }
  const IntMatrix& gram() const { return data_->gram; }
  const Integer& det() const { return data_->det; }
  const RatMatrix& inverse_gram() const { return data_->inverse; }
  const Ldlt& factorization() const { return data_->factor; }

  /// Q* on dual coordinates: weights 1/D_k, coupling L^{-1}.
  const QuadraticChain& dual_chain() const { return data_->dual; }
  /// Q on lattice coordinates, coordinates reversed: weights D_{r-1-k},
  /// coupling taken from L^T.
  const QuadraticChain& primal_chain() const { return data_->primal; }

 private:
  struct Data {
    IntMatrix gram;
    Integer det;
    RatMatrix inverse;
    Ldlt factor;
    QuadraticChain dual;
    QuadraticChain primal;
  };

  explicit GramLattice(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  static void build_chains(Data& d) {
    const std::size_t r = d.gram.rows();
    const RatMatrix& l = d.factor.unit_lower;

    RatMatrix linv = RatMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        Rational s;
        for (std::size_t k = j; k < i; ++k) s += l(i, k) * linv(k, j);
        linv(i, j) = -s;
      }
    d.dual.weights.resize(r);
    for (std::size_t k = 0; k < r; ++k) d.dual.weights[k] = 1 / d.factor.pivots[k];
    d.dual.coupling = std::move(linv);

    d.primal.weights.resize(r);
    d.primal.coupling = RatMatrix(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      d.primal.weights[k] = d.factor.pivots[r - 1 - k];
      for (std::size_t j = 0; j < k; ++j) d.primal.coupling(k, j) = l(r - 1 - j, r - 1 - k);
    }
  }

  std::shared_ptr<const Data> data_;
};

inline GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const std::size_t ra = a.rank();
  const std::size_t n = ra + b.rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(ra + i, ra + j) = b.gram()(i, j);
  return GramLattice::make(std::move(g));
}

inline const Integer& determinant(const GramLattice& lattice) { return lattice.det(); }

struct CharCovector {
  IntVector coords;
};

inline bool is_characteristic(const GramLattice& lattice, const IntVector& xi) {
  if (xi.size() != lattice.rank()) return false;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    if (mod(Integer(xi[k] - lattice.gram()(k, k)), Integer(2)) != 0) return false;
  }
  return true;
}

/// Q*(xi, eta) = xi^T G^{-1} eta.
inline Rational dual_norm(const GramLattice& lattice, const IntVector& xi, const IntVector& eta) {
  const std::size_t r = lattice.rank();
  if (xi.size() != r || eta.size() != r) throw Error(ErrorKind::InvalidArgument, "covector length differs from rank");
  Rational total;
  for (std::size_t i = 0; i < r; ++i) {
    if (xi[i] == 0) continue;
    Rational row;
    for (std::size_t j = 0; j < r; ++j) row += lattice.inverse_gram()(i, j) * eta[j];
    total += row * xi[i];
  }
  return total;
}

inline Rational dual_norm(const GramLattice& lattice, const IntVector& xi) { return dual_norm(lattice, xi, xi); }

/// Which lattice the center is shifted by: 2L* (all of 2Z^r in dual
/// coordinates) or the image 2L = 2 G Z^r.
enum class ShiftModulus { TwiceDual, TwiceLattice };

struct ShiftedMinimum {
  Rational value;
  IntVector witness;
};

inline ShiftedMinimum shifted_min(const GramLattice& lattice, const IntVector& center, ShiftModulus modulus) {
  const std::size_t r = lattice.rank();
  if (center.size() != r) throw Error(ErrorKind::InvalidArgument, "center length differs from rank");
  const Rational seed = dual_norm(lattice, center);

  if (modulus == ShiftModulus::TwiceDual) {
    RatVector offset(center.begin(), center.end());
    auto best = minimize_over_coset(lattice.dual_chain(), offset, Integer(2), CosetMinimum{seed, offset});
    IntVector witness(r);
    for (std::size_t k = 0; k < r; ++k) witness[k] = best.point[k].get_num();
    return {best.value, std::move(witness)};
  }

  // xi = center + 2 G t  <=>  y = G^{-1} xi in G^{-1} center + 2 Z^r, Q*(xi) = y^T G y.
  const RatVector y0 = multiply(lattice.inverse_gram(), center);
  RatVector offset(r);
  for (std::size_t k = 0; k < r; ++k) offset[k] = y0[r - 1 - k];
  auto best = minimize_over_coset(lattice.primal_chain(), offset, Integer(2), CosetMinimum{seed, offset});
  IntVector witness(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational s;
    for (std::size_t j = 0; j < r; ++j) s += lattice.gram()(i, j) * best.point[r - 1 - j];
    witness[i] = s.get_num();
  }
  return {best.value, std::move(witness)};
}

inline IntVector characteristic_parity(const GramLattice& lattice) {
  IntVector c(lattice.rank());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = mod(lattice.gram()(k, k), Integer(2));
  return c;
}

struct CharNormMinimum {
  Rational value;
  CharCovector witness;
};

inline CharNormMinimum min_char_norm(const GramLattice& lattice) {
  auto best = shifted_min(lattice, characteristic_parity(lattice), ShiftModulus::TwiceDual);
  return {best.value, CharCovector{std::move(best.witness)}};
}

struct DiscriminantGroup {
  IntVector invariant_factors;  // each > 1, each divides the next
  Integer order = 1;

  bool cyclic() const { return invariant_factors.size() <= 1; }
};

/// Labels the det(L) cosets of 2L inside char(L) by the Smith coordinates
/// of s = (xi - diag G) / 2 in Z^r / G Z^r, flattened in mixed radix.
class CharCosetIndex {
 public:
  explicit CharCosetIndex(const GramLattice& lattice) : rank_(lattice.rank()) {
    auto snf = smith_normal_form(lattice.gram());
    for (std::size_t i = 0; i < rank_; ++i) {
      if (snf.diagonal[i] <= 1) continue;
      factors_.push_back(snf.diagonal[i]);
      rows_.push_back(snf.row_transform.row(i));
      IntVector col(rank_);
      for (std::size_t k = 0; k < rank_; ++k) col[k] = snf.row_transform_inverse(k, i);
      cols_.push_back(std::move(col));
    }
    diag_.resize(rank_);
    for (std::size_t k = 0; k < rank_; ++k) diag_[k] = lattice.gram()(k, k);
    count_ = 1;
    for (const auto& f : factors_) count_ *= f.get_ui();
  }

  std::size_t size() const { return count_; }
  const IntVector& factors() const { return factors_; }

  DiscriminantGroup group() const {
    DiscriminantGroup g;
    g.invariant_factors = factors_;
    for (const auto& f : factors_) g.order *= f;
    return g;
  }

  /// Residues of an arbitrary dual vector s in the Smith coordinates.
  IntVector residues_of_dual(const IntVector& s) const {
    IntVector res(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Integer v;
      for (std::size_t k = 0; k < rank_; ++k) v += rows_[i][k] * s[k];
      res[i] = mod(v, factors_[i]);
    }
    return res;
  }

  std::size_t flatten(const IntVector& residues) const {
    std::size_t label = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) label = label * factors_[i].get_ui() + residues[i].get_ui();
    return label;
  }

  IntVector unflatten(std::size_t label) const {
    IntVector res(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::size_t f = factors_[i].get_ui();
      res[i] = static_cast<unsigned long>(label % f);
      label /= f;
    }
    return res;
  }

  std::size_t label_of(const IntVector& xi) const {
    IntVector s(rank_);
    for (std::size_t k = 0; k < rank_; ++k) {
      Integer diff = xi[k] - diag_[k];
      if (mod(diff, Integer(2)) != 0) throw Error(ErrorKind::InvalidArgument, "covector is not characteristic");
      mpz_divexact_ui(diff.get_mpz_t(), diff.get_mpz_t(), 2);
      s[k] = diff;
    }
    return flatten(residues_of_dual(s));
  }

  /// diag G + 2 U^{-1} k for the residue vector k of `label`.
  IntVector representative(std::size_t label) const {
    const IntVector res = unflatten(label);
    IntVector xi = diag_;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (std::size_t k = 0; k < rank_; ++k) xi[k] += 2 * cols_[i][k] * res[i];
    return xi;
  }

  std::size_t negation(std::size_t label) const {
    IntVector xi = representative(label);
    for (auto& v : xi) v = -v;
    return label_of(xi);
  }

 private:
  std::size_t rank_;
  std::size_t count_ = 1;
  IntVector factors_;
  std::vector<IntVector> rows_;
  std::vector<IntVector> cols_;
  IntVector diag_;
};

inline DiscriminantGroup discriminant_group(const GramLattice& lattice) { return CharCosetIndex(lattice).group(); }

struct CharCoset {
  std::size_t label = 0;
  IntVector residues;
  CharCovector witness;  // a norm-minimizing representative
  Rational minimum;
};

struct CharCosetTable {
  DiscriminantGroup group;
  std::vector<CharCoset> cosets;     // indexed by label
  std::vector<std::size_t> negation;  // label of -c
};

inline CharCosetTable char_coset_minima(const GramLattice& lattice) {
  const CharCosetIndex index(lattice);
  CharCosetTable table;
  table.group = index.group();
  table.cosets.reserve(index.size());
  table.negation.reserve(index.size());
  for (std::size_t label = 0; label < index.size(); ++label) {
    auto best = shifted_min(lattice, index.representative(label), ShiftModulus::TwiceLattice);
    table.cosets.push_back(CharCoset{label, index.unflatten(label), CharCovector{std::move(best.witness)}, best.value});
    table.negation.push_back(index.negation(label));
  }
  return table;
}

struct StandardVerdict {
  bool standard = false;
  Integer delta;         // determinant when standard
  std::size_t unit_splits = 0;
  IntMatrix residual;    // the summand left once no norm-1 vector remains
};

/// Peels off orthogonal <1> summands one norm-1 vector at a time.
inline StandardVerdict split_standard(const GramLattice& lattice) {
  StandardVerdict verdict;
  GramLattice current = lattice;
  while (current.rank() > 1) {
    const std::size_t r = current.rank();
    auto reversed = find_nonzero_within(current.primal_chain(), Rational(1));
    if (!reversed) break;
    IntVector v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = (*reversed)[r - 1 - k];

    // v has norm 1, so f = G v is primitive and Z^r = Z v (+) ker f.
    const IntVector f = multiply(current.gram(), v);
    IntMatrix gens(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) gens(i, k) = (i == k ? Integer(1) : Integer(0)) - f[i] * v[k];
    const IntMatrix basis = row_basis(gens);
    const IntMatrix complement = basis * current.gram() * basis.transpose();
    current = GramLattice::make(complement);
    ++verdict.unit_splits;
  }
  verdict.residual = current.gram();
  verdict.standard = current.rank() == 1;
  if (verdict.standard) verdict.delta = current.gram()(0, 0);
  return verdict;
}

struct OwensStrleReport {
  std::size_t rank = 0;
  Integer delta;
  Rational bound;
  Rational minimum;
  CharCovector witness;
  bool standard = false;
  bool equality = false;
  bool congruent = false;
  std::vector<std::string> violations;
};

/// Bound r - 1 + 1/delta (delta odd) or r - 1 (delta even).
inline Rational characteristic_bound(std::size_t rank, const Integer& delta) {
  Rational b = Rational(static_cast<long>(rank) - 1);
  if (mod(delta, Integer(2)) == 1) b += make_rational(1, delta);
  return b;
}

inline OwensStrleReport owens_strle_report(const GramLattice& lattice) {
  OwensStrleReport rep;
  rep.rank = lattice.rank();
  rep.delta = lattice.det();
  rep.bound = characteristic_bound(rep.rank, rep.delta);
  auto mu = min_char_norm(lattice);
  rep.minimum = mu.value;
  rep.witness = std::move(mu.witness);
  rep.standard = split_standard(lattice).standard;
  rep.equality = rep.minimum == rep.bound;

  if (rep.minimum > rep.bound) {
    rep.violations.push_back("minimum " + to_string(rep.minimum) + " exceeds bound " + to_string(rep.bound));
  }
  if (rep.equality != rep.standard) {
    rep.violations.push_back(rep.standard ? "standard lattice with strict inequality"
                                          : "non-standard lattice attains the bound");
  }
  const Rational scaled = (rep.bound - rep.minimum) * Rational(rep.delta) / 4;
  rep.congruent = is_integer(scaled);
  if (!rep.congruent) rep.violations.push_back("bound and minimum are not congruent modulo 4/delta");
  return rep;
}

/// Throws AssertionViolated when the characterization fails on `lattice`.
inline OwensStrleReport owens_strle_check(const GramLattice& lattice) {
  auto rep = owens_strle_report(lattice);
  if (!rep.violations.empty()) {
    std::string msg;
    for (const auto& v : rep.violations) msg += (msg.empty() ? "" : "; ") + v;
    throw Error(ErrorKind::AssertionViolated, msg);
  }
  return rep;
}

}  // namespace dehnlat
