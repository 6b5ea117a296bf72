#pragma once

// The fixed lattice corpus: every linear lattice with p <= 50, every
// diagonal lattice of rank <= 4 with entries <= 9, and 200 seeded random
// positive definite matrices of rank <= 4 with entries in [-6, 6].

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "../lattice.hpp"
#include "../lens.hpp"
#include "oracles.hpp"

namespace dehnlat::verify {

enum class Family { Linear, Diagonal, Random };

struct CorpusEntry {
  std::string name;
  Family family;
  GramLattice lattice;
  std::int64_t p = 0;  // linear lattices only
  std::int64_t q = 0;
};

inline constexpr std::uint64_t corpus_seed = 0x5eed2024ULL;
inline constexpr int random_count = 200;

inline oracle::I64Matrix to_i64(const GramLattice& lattice) {
  oracle::I64Matrix g(lattice.rank(), std::vector<std::int64_t>(lattice.rank()));
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    for (std::size_t j = 0; j < lattice.rank(); ++j) g[i][j] = lattice.gram()(i, j).get_si();
  return g;
}

inline std::string gram_name(const oracle::I64Matrix& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.size(); ++i) {
    s += i ? ";" : "";
    for (std::size_t j = 0; j < g.size(); ++j) s += (j ? "," : "") + std::to_string(g[i][j]);
  }
  return s + "]";
}

inline std::vector<CorpusEntry> linear_corpus(std::int64_t max_p = 50) {
  std::vector<CorpusEntry> out;
  for (std::int64_t p = 2; p <= max_p; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) {
        out.push_back({"Lambda(" + std::to_string(p) + "," + std::to_string(q) + ")", Family::Linear,
                       linear_lattice(Integer(static_cast<long>(p)), Integer(static_cast<long>(q))), p, q});
      }
  return out;
}

inline std::vector<CorpusEntry> diagonal_corpus(std::size_t max_rank = 4, std::int64_t max_entry = 9) {
  std::vector<CorpusEntry> out;
  std::vector<std::int64_t> a;
  auto recurse = [&](auto&& self, std::int64_t low) -> void {
    if (!a.empty()) {
      IntVector entries;
      std::string name = "<";
      for (std::size_t i = 0; i < a.size(); ++i) {
        entries.push_back(Integer(static_cast<long>(a[i])));
        name += (i ? "," : "") + std::to_string(a[i]);
      }
      out.push_back({name + ">", Family::Diagonal, GramLattice::diagonal(entries)});
    }
    if (a.size() == max_rank) return;
    for (std::int64_t v = low; v <= max_entry; ++v) {
      a.push_back(v);
      self(self, v);
      a.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

/// Rank uniform in 1..4, off-diagonal entries uniform in [-6, 6], diagonal
/// entries uniform in [1, 6]; draws that are not positive definite are
/// rejected and redrawn at the same rank.
inline std::vector<CorpusEntry> random_corpus(int count = random_count, std::uint64_t seed = corpus_seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank_dist(1, 4);
  std::uniform_int_distribution<int> off(-6, 6);
  std::uniform_int_distribution<int> diag(1, 6);
  std::vector<CorpusEntry> out;
  while (static_cast<int>(out.size()) < count) {
    const auto r = static_cast<std::size_t>(rank_dist(rng));
    for (;;) {
      IntMatrix g(r, r);
      oracle::I64Matrix raw(r, std::vector<std::int64_t>(r));
      for (std::size_t i = 0; i < r; ++i) {
        raw[i][i] = diag(rng);
        for (std::size_t j = i + 1; j < r; ++j) raw[i][j] = raw[j][i] = off(rng);
      }
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) g(i, j) = Integer(static_cast<long>(raw[i][j]));
      if (!ldlt(to_rational(g)).positive_definite) continue;
      out.push_back({"random" + std::to_string(out.size()) + gram_name(raw), Family::Random, GramLattice::make(std::move(g))});
      break;
    }
  }
  return out;
}

inline std::vector<CorpusEntry> lattice_corpus() {
  std::vector<CorpusEntry> out = linear_corpus();
  for (auto& e : diagonal_corpus()) out.push_back(std::move(e));
  for (auto& e : random_corpus()) out.push_back(std::move(e));
  return out;
}

/// Standardness decided without the library's splitting search.
inline bool oracle_standard(const CorpusEntry& e) {
  if (e.family == Family::Linear && e.lattice.rank() > 4) {
    // A tridiagonal form with diagonal >= 2 and off-diagonal -1 is
    // x_1^2 + x_k^2 + sum (a_i - 2) x_i^2 + sum (x_i - x_{i+1})^2, which is
    // at least 2 on nonzero vectors, so only rank 1 is standard.
    return false;
  }
  return oracle::is_standard(to_i64(e.lattice));
}

}  // namespace dehnlat::verify
