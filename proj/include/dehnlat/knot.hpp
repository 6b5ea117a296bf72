#pragma once

// Knot inputs: symmetrized Alexander polynomials, torsion coefficients and
// the V-sequence V_0, V_1, ... that drives surgery correction terms.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "json.hpp"

namespace dehnlat {

/// Finitely supported Laurent polynomial with a_m = a_{-m} and Delta(1) = 1.
class AlexanderPolynomial {
 public:
  AlexanderPolynomial() : coeffs_{{0, Integer(1)}} {}

  /// Takes any subset of exponents; the other side is filled by symmetry.
  /// Both sides present with different values is AsymmetricAlexander.
  static AlexanderPolynomial make(const std::map<std::int64_t, Integer>& terms) {
    std::map<std::int64_t, Integer> full;
    for (const auto& [m, a] : terms) {
      if (a == 0) continue;
      for (std::int64_t e : {m, -m}) {
        auto [it, inserted] = full.emplace(e, a);
        if (!inserted && it->second != a) {
          throw Error(ErrorKind::AsymmetricAlexander,
                      "a_" + std::to_string(e) + " = " + it->second.get_str() + " but a_" + std::to_string(-e) + " = " + a.get_str());
        }
      }
    }
    Integer total;
    for (const auto& [m, a] : full) total += a;
    if (total != 1) throw Error(ErrorKind::NotNormalized, "Delta(1) = " + total.get_str() + ", expected 1");
    AlexanderPolynomial poly;
    poly.coeffs_ = std::move(full);
    return poly;
  }

  std::int64_t degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  Integer coefficient(std::int64_t m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  const std::map<std::int64_t, Integer>& terms() const { return coeffs_; }

  friend bool operator==(const AlexanderPolynomial& a, const AlexanderPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::map<std::int64_t, Integer> coeffs_;
};

/// Symmetrized (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)) by exact long division.
inline AlexanderPolynomial torus_alexander(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) throw Error(ErrorKind::InvalidArgument, "torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");

  using Poly = std::vector<Integer>;  // index = exponent
  auto mul = [](const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  auto binomial = [](std::int64_t e) {  // t^e - 1
    Poly out(static_cast<std::size_t>(e) + 1);
    out[0] = -1;
    out[e] = 1;
    return out;
  };
  Poly num = mul(binomial(p * q), binomial(1));
  const Poly den = mul(binomial(p), binomial(q));

  // Monic divisor, so the quotient stays integral.
  const std::size_t dd = den.size() - 1;
  Poly quot(num.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer c = num[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw Error(ErrorKind::AssertionViolated, "torus knot polynomial division left a remainder");

  const std::int64_t shift = (p - 1) * (q - 1) / 2;
  std::map<std::int64_t, Integer> terms;
  for (std::size_t e = 0; e < quot.size(); ++e)
    if (quot[e] != 0) terms[static_cast<std::int64_t>(e) - shift] = quot[e];
  return AlexanderPolynomial::make(terms);
}

/// t_i = sum_{j >= 1} j * a_{i+j} for 0 <= i <= deg; t_deg = 0.
inline IntVector torsion_coefficients(const AlexanderPolynomial& delta) {
  const std::int64_t g = delta.degree();
  IntVector t(static_cast<std::size_t>(g) + 1);
  for (std::int64_t i = 0; i <= g; ++i)
    for (std::int64_t j = 1; i + j <= g; ++j) t[static_cast<std::size_t>(i)] += j * delta.coefficient(i + j);
  return t;
}

/// Delta''(1) = sum_m m (m-1) a_m.
inline Integer delta_second_derivative(const AlexanderPolynomial& delta) {
  Integer total;
  for (const auto& [m, a] : delta.terms()) total += Integer(static_cast<long>(m)) * (m - 1) * a;
  return total;
}

/// V_0, V_1, ... (zero past the stored values) with a declared slice genus.
/// Construction enforces V_i - 1 <= V_{i+1} <= V_i, V_i <= ceil((g4 - i)/2)
/// for i < g4, and V_i = 0 for i >= g4.
class VSequence {
 public:
  VSequence() = default;

  static VSequence make(IntVector values, std::int64_t slice_genus) {
    if (slice_genus < 0) throw Error(ErrorKind::VInvariantViolated, "negative slice genus");
    while (!values.empty() && values.back() == 0) values.pop_back();
    VSequence v;
    v.values_ = std::move(values);
    v.g4_ = slice_genus;
    if (auto why = v.violation()) throw Error(ErrorKind::VInvariantViolated, *why);
    return v;
  }

  Integer at(std::int64_t i) const {
    if (i < 0) throw Error(ErrorKind::IndexOutOfRange, "negative V index");
    return i < static_cast<std::int64_t>(values_.size()) ? values_[static_cast<std::size_t>(i)] : Integer(0);
  }

  const IntVector& values() const { return values_; }
  std::int64_t slice_genus() const { return g4_; }

  friend bool operator==(const VSequence& a, const VSequence& b) { return a.values_ == b.values_ && a.g4_ == b.g4_; }

 private:
  std::optional<std::string> violation() const {
    const std::int64_t n = static_cast<std::int64_t>(values_.size());
    for (std::int64_t i = 0; i < n; ++i) {
      const Integer v = at(i);
      const Integer next = at(i + 1);
      if (v < 0) return "V_" + std::to_string(i) + " = " + v.get_str() + " is negative";
      if (next > v) return "V_" + std::to_string(i + 1) + " > V_" + std::to_string(i);
      if (next < v - 1) return "V_" + std::to_string(i + 1) + " < V_" + std::to_string(i) + " - 1";
      if (i >= g4_ && v != 0) return "V_" + std::to_string(i) + " = " + v.get_str() + " but i >= g4 = " + std::to_string(g4_);
      if (i < g4_) {
        const std::int64_t cap = (g4_ - i + 1) / 2;
        if (v > cap) return "V_" + std::to_string(i) + " = " + v.get_str() + " exceeds ceil((g4 - i)/2) = " + std::to_string(cap);
      }
    }
    return std::nullopt;
  }

  IntVector values_;
  std::int64_t g4_ = 0;
};

struct KnotModel {
  std::string name;
  std::optional<AlexanderPolynomial> alexander;
  std::optional<std::int64_t> genus;
  std::int64_t slice_genus = 0;
  bool l_space = false;
  std::optional<IntVector> v_sequence;
};

namespace detail {

[[noreturn]] inline void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

inline Integer json_integer(const nlohmann::json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  field_error(field, "expected an integer");
}

}  // namespace detail

/// {"name", "alexander": [[m, a_m], ...], "slice_genus", "l_space",
///  "v_sequence" (optional), "genus" (optional)}.
inline KnotModel parse_knot(const nlohmann::json& doc) {
  using detail::field_error;
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "knot document must be a JSON object");
  KnotModel k;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) field_error("name", "expected a string");
    k.name = it->get<std::string>();
  }
  if (auto it = doc.find("alexander"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) field_error("alexander", "expected an array of [m, a_m] pairs");
    std::map<std::int64_t, Integer> terms;
    for (std::size_t idx = 0; idx < it->size(); ++idx) {
      const auto& pair = (*it)[idx];
      const std::string where = "alexander[" + std::to_string(idx) + "]";
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer()) field_error(where, "expected [m, a_m]");
      const auto m = pair[0].get<std::int64_t>();
      const Integer a = detail::json_integer(pair[1], where);
      if (auto [pos, inserted] = terms.emplace(m, a); !inserted && pos->second != a) field_error(where, "exponent repeated");
    }
    k.alexander = AlexanderPolynomial::make(terms);
  }
  if (auto it = doc.find("slice_genus"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0) field_error("slice_genus", "expected a non-negative integer");
    k.slice_genus = it->get<std::int64_t>();
  } else {
    field_error("slice_genus", "missing");
  }
  if (auto it = doc.find("genus"); it != doc.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0) field_error("genus", "expected a non-negative integer");
    k.genus = it->get<std::int64_t>();
  }
  if (auto it = doc.find("l_space"); it != doc.end()) {
    if (!it->is_boolean()) field_error("l_space", "expected a boolean");
    k.l_space = it->get<bool>();
  }
  if (auto it = doc.find("v_sequence"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) field_error("v_sequence", "expected an array of integers");
    IntVector v;
    for (std::size_t idx = 0; idx < it->size(); ++idx) v.push_back(detail::json_integer((*it)[idx], "v_sequence[" + std::to_string(idx) + "]"));
    k.v_sequence = std::move(v);
  }
  if (!k.v_sequence && !(k.l_space && k.alexander)) {
    throw Error(ErrorKind::MissingVData, "knot '" + k.name + "' needs v_sequence, or l_space with alexander");
  }
  return k;
}

inline nlohmann::json knot_to_json(const KnotModel& k) {
  nlohmann::json doc;
  doc["name"] = k.name;
  doc["slice_genus"] = k.slice_genus;
  doc["l_space"] = k.l_space;
  if (k.genus) doc["genus"] = *k.genus;
  if (k.alexander) {
    auto arr = nlohmann::json::array();
    for (const auto& [m, a] : k.alexander->terms())
      if (m >= 0) arr.push_back({m, a.get_si()});
    doc["alexander"] = arr;
  }
  if (k.v_sequence) {
    auto arr = nlohmann::json::array();
    for (const auto& v : *k.v_sequence) arr.push_back(v.get_si());
    doc["v_sequence"] = arr;
  }
  return doc;
}

struct VSequenceResult {
  VSequence sequence;
  std::vector<std::string> warnings;
};

/// Explicit values win; otherwise an L-space knot gets V_i = t_i(Delta) with
/// g4 = deg(Delta). Either way the sequence is re-validated.
inline VSequenceResult v_sequence(const KnotModel& k) {
  VSequenceResult out;
  std::optional<VSequence> derived;
  if (k.l_space && k.alexander) {
    const std::int64_t g = k.alexander->degree();
    IntVector t = torsion_coefficients(*k.alexander);
    t.resize(static_cast<std::size_t>(g));
    derived = VSequence::make(std::move(t), g);
    if (k.slice_genus != g) {
      out.warnings.push_back("slice_genus " + std::to_string(k.slice_genus) + " differs from deg(Delta) = " + std::to_string(g) +
                             "; using deg(Delta) for the L-space knot");
    }
  }
  if (k.v_sequence) {
    const std::int64_t g4 = derived ? derived->slice_genus() : k.slice_genus;
    out.sequence = VSequence::make(*k.v_sequence, g4);
    if (derived && !(derived->values() == out.sequence.values())) {
      out.warnings.push_back("explicit v_sequence disagrees with the torsion coefficients of Delta; using the explicit values");
    }
    return out;
  }
  if (!derived) throw Error(ErrorKind::MissingVData, "knot '" + k.name + "' has no V data");
  out.sequence = std::move(*derived);
  return out;
}

}  // namespace dehnlat
