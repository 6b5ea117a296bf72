#pragma once

// Exact branch-and-bound over cosets of a scaled integer lattice.
//
// A positive definite quadratic form is handled in its triangular
// ("chain") shape
//
//     F(x) = sum_k  w_k * (x_k + sum_{j<k} c_{kj} x_j)^2 ,   w_k > 0,
//
// so that fixing x_0, ..., x_{k-1} pins the k-th term's center. Levels are
// visited in Schnorr-Euchner zig-zag order around that center. Subtrees are
// memoized on the vector of pending center contributions: for banded forms
// (linear lattices, diagonal lattices) many branches share that state, which
// keeps deep searches polynomial.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "matrix.hpp"

namespace dehnlat {

struct QuadraticChain {
  RatVector weights;
  RatMatrix coupling;  // strictly lower part is read

  std::size_t dimension() const { return weights.size(); }

  Rational evaluate(std::span<const Rational> x) const {
    Rational total;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      Rational t = x[k];
      for (std::size_t j = 0; j < k; ++j) t += coupling(k, j) * x[j];
      total += weights[k] * t * t;
    }
    return total;
  }
};

struct CosetMinimum {
  Rational value;
  RatVector point;
};

namespace detail {

struct RatVectorLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

/// Integers ordered by distance from a rational target; ties go to the
/// smaller integer.
class ZigZag {
 public:
  explicit ZigZag(const Rational& target) : target_(target), lo_(dehnlat::floor(target)), hi_(lo_ + 1) {}

  Integer next() {
    if (target_ - lo_ <= hi_ - target_) return lo_--;
    return hi_++;
  }

 private:
  Rational target_;
  Integer lo_;
  Integer hi_;
};

class CosetSearch {
 public:
  CosetSearch(const QuadraticChain& chain, std::span<const Rational> offset, const Integer& step)
      : chain_(chain), offset_(offset.begin(), offset.end()), step_(step), memo_(chain.dimension()) {}

  struct Entry {
    bool exact = false;
    Rational value;   // exact minimum of the completion, or a lower bound
    RatVector suffix;  // minimizing x_k, ..., x_{r-1} when exact
  };

  Entry solve(std::size_t level, const RatVector& pending, const Rational& budget) {
    const std::size_t r = chain_.dimension();
    if (level == r) return Entry{true, Rational(0), {}};

    auto& table = memo_[level];
    if (auto it = table.find(pending); it != table.end()) {
      if (it->second.exact || it->second.value >= budget) return it->second;
    }

    const Rational center = -pending[0];
    const Rational& weight = chain_.weights[level];
    ZigZag steps((center - offset_[level]) / step_);

    std::optional<Rational> best;
    RatVector best_suffix;
    RatVector next(r - level - 1);
    for (;;) {
      const Rational x = offset_[level] + Rational(step_ * steps.next());
      const Rational t = x - center;
      const Rational cost = weight * t * t;
      const Rational cap = (best && *best < budget) ? *best : budget;
      if (cost >= cap) break;
      for (std::size_t i = level + 1; i < r; ++i) next[i - level - 1] = pending[i - level] + chain_.coupling(i, level) * x;
      const Rational remaining = cap - cost;
      Entry sub = solve(level + 1, next, remaining);
      if (sub.exact && sub.value < remaining) {
        best = cost + sub.value;
        best_suffix.clear();
        best_suffix.push_back(x);
        best_suffix.insert(best_suffix.end(), sub.suffix.begin(), sub.suffix.end());
      }
    }

    Entry out;
    if (best && *best < budget) {
      out = Entry{true, *best, std::move(best_suffix)};
    } else {
      out = Entry{false, budget, {}};
    }
    table[pending] = out;
    return out;
  }

 private:
  const QuadraticChain& chain_;
  RatVector offset_;
  Integer step_;
  std::vector<std::map<RatVector, Entry, RatVectorLess>> memo_;
};

}  // namespace detail

/// Minimum of F over offset + step * Z^r. The incumbent (usually the offset
/// itself) seeds the radius; it is returned unchanged unless a strictly
/// smaller value exists, so ties keep the incumbent and otherwise the first
/// point met in zig-zag order.
inline CosetMinimum minimize_over_coset(const QuadraticChain& chain, std::span<const Rational> offset,
                                        const Integer& step, CosetMinimum incumbent) {
  const std::size_t r = chain.dimension();
  if (r == 0) return incumbent;
  detail::CosetSearch search(chain, offset, step);
  RatVector pending(r);
  auto result = search.solve(0, pending, incumbent.value);
  if (result.exact && result.value < incumbent.value) {
    return CosetMinimum{result.value, std::move(result.suffix)};
  }
  return incumbent;
}

/// First nonzero integer vector x (zig-zag order) with F(x) <= bound.
inline std::optional<IntVector> find_nonzero_within(const QuadraticChain& chain, const Rational& bound) {
  const std::size_t r = chain.dimension();
  IntVector x(r);
  std::optional<IntVector> found;

  // pending[i] = sum_{j<level} c_{ij} x_j for i >= level.
  auto descend = [&](auto&& self, std::size_t level, const RatVector& pending, const Rational& left) -> bool {
    if (level == r) {
      for (const auto& v : x)
        if (v != 0) {
          found = x;
          return true;
        }
      return false;
    }
    const Rational center = -pending[0];
    detail::ZigZag steps(center);
    RatVector next(r - level - 1);
    for (;;) {
      const Integer v = steps.next();
      const Rational t = Rational(v) - center;
      const Rational cost = chain.weights[level] * t * t;
      if (cost > left) return false;
      x[level] = v;
      for (std::size_t i = level + 1; i < r; ++i) next[i - level - 1] = pending[i - level] + chain.coupling(i, level) * Rational(v);
      if (self(self, level + 1, next, left - cost)) return true;
    }
  };
  descend(descend, 0, RatVector(r), bound);
  return found;
}

}  // namespace dehnlat
