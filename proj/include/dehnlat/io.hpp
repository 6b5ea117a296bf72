#pragma once

// JSON reading and report rendering. Rationals are always strings; objects
// use sorted keys, so rendering a parsed report reproduces it byte for byte.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "arith.hpp"
#include "error.hpp"
#include "knot.hpp"
#include "lattice.hpp"
#include "lens.hpp"
#include "surgery.hpp"

namespace dehnlat {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k)
      if (text[k] == '\n') ++line;
    throw Error(ErrorKind::ParseError, path + ":" + std::to_string(line) + ": " + e.what());
  }
}

/// {"gram": [[...], ...]} with integer entries (numbers or digit strings).
inline GramLattice parse_gram(const Json& doc) {
  if (!doc.is_object() || !doc.contains("gram")) throw Error(ErrorKind::ParseError, "field 'gram': missing");
  const Json& rows = doc.at("gram");
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::ParseError, "field 'gram': expected a non-empty array of rows");
  const std::size_t n = rows.size();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string field = "gram[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw Error(ErrorKind::ParseError, "field '" + field + "': expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) g(i, j) = detail::json_integer(rows[i][j], field + "[" + std::to_string(j) + "]");
  }
  return GramLattice::make(std::move(g));
}

inline Json gram_to_json(const GramLattice& lattice) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < lattice.rank(); ++j) row.push_back(lattice.gram()(i, j).get_si());
    rows.push_back(std::move(row));
  }
  return Json{{"gram", std::move(rows)}};
}

inline std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline Json strings(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

inline Json strings(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json matrix_strings(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(strings(m.row(i)));
  return out;
}

inline Json report(const std::string& verdict, const std::string& mode, Json witness, Json data) {
  return Json{{"verdict", verdict}, {"mode", mode}, {"witness", std::move(witness)}, {"data", std::move(data)}};
}

}  // namespace detail

inline Json table_json(const DInvariantTable& t) {
  return detail::report("computed", "table", nullptr,
                        Json{{"source", t.source},
                             {"p", t.p},
                             {"conjugation_shift", t.conjugation_shift},
                             {"d", detail::strings(t.values)},
                             {"sum", to_string(t.sum())},
                             {"minimum", to_string(t.minimum())}});
}

inline Json owens_strle_json(const OwensStrleReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(v);
  return Json{{"rank", r.rank},
              {"delta", r.delta.get_str()},
              {"bound", to_string(r.bound)},
              {"minimum", to_string(r.minimum)},
              {"witness", detail::strings(r.witness.coords)},
              {"standard", r.standard},
              {"equality", r.equality},
              {"congruent", r.congruent},
              {"violations", std::move(violations)}};
}

inline Json standard_json(const StandardVerdict& v) {
  Json out{{"standard", v.standard}, {"unit_splits", v.unit_splits}, {"residual", detail::matrix_strings(v.residual)}};
  if (v.standard) out["delta"] = v.delta.get_str();
  return out;
}

inline Json analysis_json(const GramLattice& lattice) {
  const auto group = discriminant_group(lattice);
  const auto mu = min_char_norm(lattice);
  const auto split = split_standard(lattice);
  const auto os = owens_strle_report(lattice);
  return detail::report(split.standard ? "standard" : "non-standard", "analyze", detail::strings(mu.witness.coords),
                        Json{{"rank", lattice.rank()},
                             {"determinant", lattice.det().get_str()},
                             {"invariant_factors", detail::strings(group.invariant_factors)},
                             {"cyclic", group.cyclic()},
                             {"min_char_norm", to_string(mu.value)},
                             {"standard", standard_json(split)},
                             {"owens_strle", owens_strle_json(os)}});
}

inline Json obstruction_json(const ObstructionReport& r) {
  Json witness = nullptr;
  if (!r.assignment.empty()) {
    Json assignment = Json::array();
    for (auto c : r.assignment) assignment.push_back(c);
    witness = Json{{"assignment", std::move(assignment)}};
    if (r.affine) {
      witness["base"] = r.affine->base;
      witness["step"] = r.affine->step;
    }
  } else if (r.failing_index || r.failing_coset) {
    witness = Json::object();
    if (r.failing_index) witness["index"] = *r.failing_index;
    if (r.failing_coset) witness["coset"] = *r.failing_coset;
  }
  Json data{{"check", r.check},
            {"rank", r.rank},
            {"determinant", r.determinant.get_str()},
            {"coset_minima", detail::strings(r.coset_minima)},
            {"detail", r.detail}};
  if (r.lattice_side) data["lattice_side"] = to_string(*r.lattice_side);
  if (r.table_side) data["table_side"] = to_string(*r.table_side);
  return detail::report(r.pass ? "pass" : "fail", to_string(r.mode), std::move(witness), std::move(data));
}

inline Json standardness_json(const StandardnessReport& r) {
  Json warnings = Json::array();
  for (const auto& w : r.warnings) warnings.push_back(w);
  Json out = obstruction_json(r.obstruction);
  out["verdict"] = to_string(r.branch);
  out["data"]["slope"] = r.slope;
  out["data"]["threshold"] = r.threshold;
  out["data"]["square_free"] = r.square_free;
  out["data"]["obstruction"] = r.obstruction.pass ? "pass" : "fail";
  out["data"]["split"] = standard_json(r.split);
  out["data"]["warnings"] = std::move(warnings);
  return out;
}

inline Json vsequence_json(const VSequenceResult& v) {
  Json warnings = Json::array();
  for (const auto& w : v.warnings) warnings.push_back(w);
  return detail::report("computed", "vseq", nullptr,
                        Json{{"v", detail::strings(v.sequence.values())},
                             {"slice_genus", v.sequence.slice_genus()},
                             {"warnings", std::move(warnings)}});
}

}  // namespace dehnlat
