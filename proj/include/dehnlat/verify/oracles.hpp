#pragma once

// Independent reference computations used only for verification. Nothing
// here calls the library's search, Smith form or recursion code; everything
// is plain int64 arithmetic on small inputs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "../arith.hpp"

namespace dehnlat::verify::oracle {

using I64Matrix = std::vector<std::vector<std::int64_t>>;

/// ((2i - n)^2 - n) / (4n), written out without any library helper.
inline Rational lens_n1(std::int64_t n, std::int64_t i) {
  const std::int64_t a = 2 * i - n;
  Rational v(static_cast<long>(a * a - n), static_cast<unsigned long>(4 * n));
  v.canonicalize();
  return v;
}

inline std::int64_t det(const I64Matrix& g) {
  const std::size_t n = g.size();
  if (n == 0) return 1;
  if (n == 1) return g[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    I64Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(g[i][k]);
      minor.push_back(std::move(row));
    }
    const std::int64_t term = g[0][j] * det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

inline I64Matrix adjugate(const I64Matrix& g) {
  const std::size_t n = g.size();
  I64Matrix adj(n, std::vector<std::int64_t>(n, 1));
  if (n == 1) return adj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      I64Matrix minor;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == j) continue;
        std::vector<std::int64_t> row;
        for (std::size_t b = 0; b < n; ++b)
          if (b != i) row.push_back(g[a][b]);
        minor.push_back(std::move(row));
      }
      adj[i][j] = ((i + j) % 2 == 0 ? 1 : -1) * det(minor);
    }
  return adj;
}

using CosetKey = std::array<std::int64_t, 4>;

/// Brute force over characteristic covectors in the box |xi_k| <= bound.
/// Norms are kept as numerators over det: Q*(xi) = xi^T adj(G) xi / det.
/// Two characteristic covectors lie in the same coset of 2G Z^r iff
/// adj(G) (xi - eta) = 0 mod 2 det, so adj(G) xi mod 2 det keys the cosets.
struct BruteForce {
  std::int64_t det = 1;
  std::int64_t bound = 0;
  std::int64_t min_numerator = std::numeric_limits<std::int64_t>::max();
  std::map<CosetKey, std::int64_t> coset_min;  // key -> min numerator

  CosetKey key(const std::vector<std::int64_t>& xi) const { return key_of(adj, det, xi); }

  static CosetKey key_of(const I64Matrix& adj, std::int64_t det, const std::vector<std::int64_t>& xi) {
    CosetKey k{0, 0, 0, 0};
    const std::int64_t m = 2 * det;
    for (std::size_t i = 0; i < xi.size(); ++i) {
      std::int64_t v = 0;
      for (std::size_t j = 0; j < xi.size(); ++j) v += adj[i][j] * xi[j];
      k[i] = ((v % m) + m) % m;
    }
    return k;
  }

  I64Matrix adj;
};

inline BruteForce brute_force_char_minima(const I64Matrix& g) {
  const std::size_t r = g.size();
  BruteForce out;
  out.det = det(g);
  out.adj = adjugate(g);
  std::int64_t max_entry = 0;
  for (const auto& row : g)
    for (auto v : row) max_entry = std::max(max_entry, v < 0 ? -v : v);
  out.bound = 2 * static_cast<std::int64_t>(r) * max_entry;
  const auto& a = out.adj;
  const std::size_t last = r - 1;
  const std::int64_t all = out.det;
  std::int64_t threshold = std::numeric_limits<std::int64_t>::max();

  std::vector<std::int64_t> xi(r);
  auto first_of_parity = [&](std::size_t k) {
    const std::int64_t lo = -out.bound;
    return ((lo - g[k][k]) % 2 == 0) ? lo : lo + 1;
  };

  // Outer coordinates run from the centre outwards so that every coset is
  // met early and the threshold below becomes finite quickly.
  std::vector<std::vector<std::int64_t>> order(r);
  for (std::size_t k = 0; k + 1 < r; ++k) {
    for (std::int64_t v = first_of_parity(k); v <= out.bound; v += 2) order[k].push_back(v);
    std::stable_sort(order[k].begin(), order[k].end(), [](std::int64_t x, std::int64_t y) {
      return (x < 0 ? -x : x) < (y < 0 ? -y : y);
    });
  }

  auto visit_row = [&](std::int64_t outer, std::int64_t linear) {
    // N(t) = outer + 2 t linear + t^2 a_ll. Once every coset has been met,
    // skip rows whose real minimum exceeds everything still of interest.
    const std::int64_t all_ll = a[last][last];
    if (threshold != std::numeric_limits<std::int64_t>::max()) {
      const std::int64_t limit = std::max(threshold, out.min_numerator);
      if (all_ll * outer - linear * linear > limit * all_ll) return;
    }
    for (std::int64_t t = first_of_parity(last); t <= out.bound; t += 2) {
      const std::int64_t n = outer + t * (2 * linear + t * all_ll);
      if (n < out.min_numerator) out.min_numerator = n;
      if (n > threshold) continue;
      xi[last] = t;
      const CosetKey k = out.key(xi);
      auto [it, inserted] = out.coset_min.try_emplace(k, n);
      if (!inserted) {
        if (n >= it->second) continue;
        it->second = n;
      }
      if (static_cast<std::int64_t>(out.coset_min.size()) == all) {
        threshold = 0;
        for (const auto& [key, v] : out.coset_min) threshold = std::max(threshold, v);
      }
    }
  };

  // Outer coordinates 0..r-2 by recursion; the quadratic part over them and
  // the linear coefficient of the last coordinate are accumulated as we go.
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == last) {
      std::int64_t outer = 0, linear = 0;
      for (std::size_t i = 0; i < last; ++i) {
        linear += a[last][i] * xi[i];
        for (std::size_t j = 0; j < last; ++j) outer += a[i][j] * xi[i] * xi[j];
      }
      visit_row(outer, linear);
      return;
    }
    for (std::int64_t v : order[k]) {
      xi[k] = v;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

/// Number of x in Z^r with x^T G x = 1, from the box |x_k| <= sqrt(adj_kk / det).
inline std::int64_t unit_vector_count(const I64Matrix& g) {
  const std::size_t r = g.size();
  const std::int64_t d = det(g);
  const I64Matrix a = adjugate(g);
  std::vector<std::int64_t> box(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::int64_t b = 0;
    while ((b + 1) * (b + 1) * d <= a[k][k]) ++b;
    box[k] = b;
  }
  std::vector<std::int64_t> x(r);
  std::int64_t count = 0;
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == r) {
      std::int64_t q = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) q += g[i][j] * x[i] * x[j];
      if (q == 1) ++count;
      return;
    }
    for (std::int64_t v = -box[k]; v <= box[k]; ++v) {
      x[k] = v;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  return count;
}

/// Norm-1 vectors of an integral lattice are pairwise orthogonal up to sign
/// and each splits off a <1>, so L is <1>^{r-1} (+) <n> iff there are at
/// least 2(r-1) of them.
inline bool is_standard(const I64Matrix& g) {
  return unit_vector_count(g) >= 2 * (static_cast<std::int64_t>(g.size()) - 1);
}

/// Every V_0..V_{g4-1} with V_g4 = 0, V_i - 1 <= V_{i+1} <= V_i and
/// V_i <= ceil((g4 - i)/2), for all g4 in [0, max_genus].
inline std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> admissible_v_sequences(std::int64_t max_genus) {
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> out;
  for (std::int64_t g = 0; g <= max_genus; ++g) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(g));
    auto recurse = [&](auto&& self, std::int64_t i) -> void {
      if (i == g) {
        if (g == 0 || v.back() <= 1) out.emplace_back(v, g);
        return;
      }
      const std::int64_t cap = (g - i + 1) / 2;
      for (std::int64_t x = 0; x <= cap; ++x) {
        if (i > 0 && (x > v[i - 1] || x < v[i - 1] - 1)) continue;
        v[static_cast<std::size_t>(i)] = x;
        self(self, i + 1);
      }
    };
    recurse(recurse, 0);
  }
  return out;
}

/// Symmetrized Alexander polynomial of T(p,q) from the semigroup <p,q>:
/// Delta(t) = (1 - t) sum_{s in S} t^s, truncated at degree 2g.
inline std::map<std::int64_t, std::int64_t> torus_alexander(std::int64_t p, std::int64_t q) {
  const std::int64_t two_g = (p - 1) * (q - 1);
  std::vector<char> in_semigroup(static_cast<std::size_t>(two_g) + 1, 0);
  for (std::int64_t a = 0; a * p <= two_g; ++a)
    for (std::int64_t b = 0; a * p + b * q <= two_g; ++b) in_semigroup[static_cast<std::size_t>(a * p + b * q)] = 1;
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t k = 0; k <= two_g; ++k) {
    const std::int64_t c = in_semigroup[static_cast<std::size_t>(k)] - (k > 0 ? in_semigroup[static_cast<std::size_t>(k - 1)] : 0);
    if (c != 0) out[k - two_g / 2] = c;
  }
  return out;
}

/// sum_{k} (-1)^k t^{(q-1)/2 - k}, k = 0..q-1.
inline std::map<std::int64_t, std::int64_t> two_strand_alexander(std::int64_t q) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t k = 0; k < q; ++k) out[(q - 1) / 2 - k] = (k % 2 == 0) ? 1 : -1;
  return out;
}

inline std::int64_t second_derivative_at_one(const std::map<std::int64_t, std::int64_t>& poly) {
  std::int64_t s = 0;
  for (const auto& [k, a] : poly) s += a * k * (k - 1);
  return s;
}

/// t_i = sum_{j >= 1} j a_{i+j} for i >= 0.
inline std::vector<std::int64_t> torsion(const std::map<std::int64_t, std::int64_t>& poly) {
  const std::int64_t top = poly.empty() ? 0 : poly.rbegin()->first;
  std::vector<std::int64_t> t;
  for (std::int64_t i = 0; i <= top; ++i) {
    std::int64_t s = 0;
    for (const auto& [k, a] : poly)
      if (k > i) s += (k - i) * a;
    t.push_back(s);
  }
  return t;
}

/// sum_{i=0}^{n-1} max(V_i, V_{n-i}).
inline std::int64_t max_v_sum(const std::vector<std::int64_t>& v, std::int64_t n) {
  auto at = [&](std::int64_t i) { return i < static_cast<std::int64_t>(v.size()) ? v[static_cast<std::size_t>(i)] : 0; };
  std::int64_t s = 0;
  for (std::int64_t i = 0; i < n; ++i) s += std::max(at(i), at(n - i));
  return s;
}

}  // namespace dehnlat::verify::oracle
