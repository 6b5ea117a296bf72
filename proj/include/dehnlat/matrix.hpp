#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace dehnlat {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T, class V>
std::vector<T> multiply(const Matrix<T>& a, const std::vector<V>& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix-vector shape mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

inline bool is_symmetric(const IntMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

/// A = L D L^T with L unit lower triangular, computed without pivoting.
/// When a non-positive pivot appears the factorization stops there and
/// `positive_definite` is false; `pivots` then holds the pivots up to and
/// including the offending one.
struct Ldlt {
  RatMatrix unit_lower;
  RatVector pivots;
  bool positive_definite = false;
};

inline Ldlt ldlt(const RatMatrix& a) {
  const std::size_t n = a.rows();
  Ldlt f{RatMatrix::identity(n), {}, true};
  RatMatrix work = a;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = work(k, k);
    f.pivots.push_back(pivot);
    if (pivot <= 0) {
      f.positive_definite = false;
      return f;
    }
    for (std::size_t i = k + 1; i < n; ++i) f.unit_lower(i, k) = work(i, k) / pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (work(i, k) == 0) continue;
      for (std::size_t j = k + 1; j <= i; ++j) {
        work(i, j) -= f.unit_lower(i, k) * work(j, k);
        work(j, i) = work(i, j);
      }
    }
  }
  return f;
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Gauss-Jordan inverse of a nonsingular integer matrix.
inline RatMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorKind::InvalidArgument, "singular matrix");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

/// U A V = diag(d_1, ..., d_n) with d_i | d_{i+1}, d_i >= 0, U and V
/// unimodular. Only the row transform U (and its inverse) is kept.
struct SmithForm {
  IntVector diagonal;
  IntMatrix row_transform;
  IntMatrix row_transform_inverse;
};

inline SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t n = input.rows();
  const std::size_t m = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix uinv = IntMatrix::identity(n);

  // Row operation row_i += k * row_j, mirrored on U and U^{-1}.
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < m; ++c) a(i, c) += k * a(j, c);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
    for (std::size_t r = 0; r < n; ++r) uinv(r, j) -= k * uinv(r, i);
  };
  auto swap_row = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    uinv.swap_cols(i, j);
  };
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < n; ++r) a(r, i) += k * a(r, j);
  };

  const std::size_t steps = std::min(n, m);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = n, pc = m;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (a(i, j) != 0 && (pr == n || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == n) break;
      swap_row(t, pr);
      a.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < m; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < n; ++c) u(t, c) = -u(t, c);
      for (std::size_t r = 0; r < n; ++r) uinv(r, t) = -uinv(r, t);
    }
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = a(i, i);
  out.row_transform = std::move(u);
  out.row_transform_inverse = std::move(uinv);
  return out;
}

/// Basis (as rows) of the integer row span of `generators`, in echelon form.
inline IntMatrix row_basis(IntMatrix a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    // Euclid on column `col` below `rank` until a single nonzero survives.
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = rank; i < n; ++i)
        if (a(i, col) != 0 && (best == n || abs(a(i, col)) < abs(a(best, col)))) best = i;
      if (best == n) break;
      a.swap_rows(rank, best);
      bool done = true;
      for (std::size_t i = rank + 1; i < n; ++i) {
        if (a(i, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(rank, col).get_mpz_t());
        for (std::size_t j = 0; j < m; ++j) a(i, j) -= q * a(rank, j);
        if (a(i, col) != 0) done = false;
      }
      if (done) {
        ++rank;
        break;
      }
    }
  }
  IntMatrix basis(rank, m);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m; ++j) basis(i, j) = a(i, j);
  return basis;
}

}  // namespace dehnlat
