// dehnlat: correction terms, lattice invariants and surgery obstructions
// from the command line.
//
// Exit status: 0 computed or verdict pass, 1 verdict fail or a violated
// assertion, 2 invalid input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dehnlat/io.hpp"
#include "dehnlat/knot.hpp"
#include "dehnlat/lattice.hpp"
#include "dehnlat/lens.hpp"
#include "dehnlat/surgery.hpp"
#include "dehnlat/verify/criteria.hpp"

namespace {

using namespace dehnlat;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

struct Slope {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

Slope parse_slope(const std::string& text) {
  const Rational r = parse_rational(text);
  if (r <= 0) throw Error(ErrorKind::InvalidArgument, "slope must be positive, got " + text);
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "slope too large");
  return Slope{r.get_num().get_si(), r.get_den().get_si()};
}

std::string slope_text(const Slope& s) { return std::to_string(s.p) + (s.q == 1 ? "" : "/" + std::to_string(s.q)); }

KnotModel load_knot(const std::string& path) {
  KnotModel k = parse_knot(read_json_file(path));
  if (k.name.empty()) k.name = path;
  return k;
}

GramLattice load_gram(const std::string& path) { return parse_gram(read_json_file(path)); }

void write_csv(const std::string& path, const std::vector<std::pair<std::int64_t, DInvariantTable>>& tables) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << "p,q,i,d\n";
  for (const auto& [q, t] : tables)
    for (std::int64_t i = 0; i < t.p; ++i) out << t.p << "," << q << "," << i << "," << to_string(t.values[static_cast<std::size_t>(i)]) << "\n";
}

void print_table(const DInvariantTable& t) {
  std::cout << t.source << "\n";
  std::cout << "  i  d\n";
  for (std::int64_t i = 0; i < t.p; ++i) std::cout << "  " << i << "  " << to_string(t.values[static_cast<std::size_t>(i)]) << "\n";
}

void print_obstruction(const ObstructionReport& r) {
  std::cout << r.check << " (" << to_string(r.mode) << "): " << (r.pass ? "pass" : "fail") << "\n";
  std::cout << "  " << r.detail << "\n";
  if (r.lattice_side && r.table_side) std::cout << "  lattice side " << to_string(*r.lattice_side) << ", table side " << to_string(*r.table_side) << "\n";
  if (r.failing_index) std::cout << "  failing spin-c index " << *r.failing_index << "\n";
  if (!r.assignment.empty()) {
    std::cout << "  assignment i -> coset:";
    for (std::size_t i = 0; i < r.assignment.size(); ++i) std::cout << " " << i << "->" << r.assignment[i];
    std::cout << "\n";
  }
}

struct Common {
  bool json = false;
};

void add_json(CLI::App* cmd, Common& c) { cmd->add_flag("--json", c.json, "Machine-readable JSON output"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correction terms, definite lattices and surgery obstructions"};
  app.require_subcommand(1);
  Common common;

  // dinv
  auto* dinv = app.add_subcommand("dinv", "Correction-term tables");
  dinv->require_subcommand(1);

  std::int64_t lens_p = 0, lens_q = 0, max_n = 0;
  bool reversed = false;
  std::string out_path;
  auto* dinv_lens = dinv->add_subcommand("lens", "d(L(p,q), i) for every label i");
  dinv_lens->add_option("p", lens_p, "Order of H_1");
  dinv_lens->add_option("q", lens_q, "Coprime to p");
  dinv_lens->add_flag("--reversed", reversed, "Use -L(p,q)");
  dinv_lens->add_option("--max-n", max_n, "Sweep every L(p,q) with p <= N instead");
  dinv_lens->add_option("--out", out_path, "Write the table(s) as CSV");
  add_json(dinv_lens, common);

  std::string knot_path, slope_arg;
  auto* dinv_surgery = dinv->add_subcommand("surgery", "d(S^3_{p/q}(K), i) from the knot's V-sequence");
  dinv_surgery->add_option("--knot", knot_path, "Knot JSON file")->required();
  dinv_surgery->add_option("--slope", slope_arg, "N or P/Q (fractional slopes use formula-level labels)");
  dinv_surgery->add_option("--max-n", max_n, "Sweep integer slopes 1..N instead");
  dinv_surgery->add_option("--out", out_path, "Write the table(s) as CSV");
  add_json(dinv_surgery, common);

  // knot
  auto* knot = app.add_subcommand("knot", "Knot data");
  knot->require_subcommand(1);
  auto* knot_vseq = knot->add_subcommand("vseq", "Validated V-sequence");
  knot_vseq->add_option("--knot", knot_path, "Knot JSON file")->required();
  add_json(knot_vseq, common);
  auto* knot_delta2 = knot->add_subcommand("delta2", "Delta''(1) and the torsion coefficients");
  knot_delta2->add_option("--knot", knot_path, "Knot JSON file")->required();
  add_json(knot_delta2, common);

  // lattice
  std::string gram_path;
  auto* lattice = app.add_subcommand("lattice", "Lattice invariants");
  lattice->require_subcommand(1);
  auto* lattice_analyze = lattice->add_subcommand("analyze", "Determinant, discriminant group, characteristic minimum, bound check");
  lattice_analyze->add_option("--gram", gram_path, "Gram JSON file")->required();
  add_json(lattice_analyze, common);
  auto* lattice_standard = lattice->add_subcommand("standard", "Split off <1> summands");
  lattice_standard->add_option("--gram", gram_path, "Gram JSON file")->required();
  add_json(lattice_standard, common);

  // obstruct / sharp
  std::string mode_arg = "global";
  auto* obstruct = app.add_subcommand("obstruct", "Can the lattice fill S^3_n(K) positively?");
  obstruct->add_option("--gram", gram_path, "Gram JSON file")->required();
  obstruct->add_option("--knot", knot_path, "Knot JSON file")->required();
  obstruct->add_option("--slope", slope_arg, "N or P/Q")->required();
  obstruct->add_option("--mode", mode_arg, "global | matching | affine")->check(CLI::IsMember({"global", "matching", "affine"}));
  add_json(obstruct, common);

  std::vector<std::int64_t> lens_pair;
  auto* sharp = app.add_subcommand("sharp", "Is minus the lattice a sharp filling of the reversed manifold?");
  sharp->add_option("--gram", gram_path, "Gram JSON file")->required();
  auto* sharp_lens = sharp->add_option("--lens", lens_pair, "P Q")->expected(2);
  auto* sharp_knot = sharp->add_option("--knot", knot_path, "Knot JSON file");
  sharp->add_option("--slope", slope_arg, "N (with --knot)");
  sharp->add_option("--mode", mode_arg, "global | matching | affine")->check(CLI::IsMember({"global", "matching", "affine"}));
  sharp_lens->excludes(sharp_knot);
  add_json(sharp, common);

  auto* lbound = app.add_subcommand("lbound", "Upper bound for l(K) from the beta bound");
  lbound->add_option("--knot", knot_path, "Knot JSON file")->required();
  lbound->add_option("--max-n", max_n, "Also report slopes up to N");
  add_json(lbound, common);

  auto* verify_suite = app.add_subcommand("verify-suite", "Run every acceptance check");
  add_json(verify_suite, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*dinv_lens) {
      std::vector<std::pair<std::int64_t, DInvariantTable>> tables;
      const auto orientation = reversed ? Orientation::Reversed : Orientation::Standard;
      if (max_n > 0) {
        for (std::int64_t p = 1; p <= max_n; ++p)
          for (std::int64_t q = (p == 1 ? 0 : 1); q < std::max<std::int64_t>(p, 1); ++q)
            if (std::gcd(p, q) == 1) tables.emplace_back(q, d_lens_table(LensSpace::make(p, q, orientation)));
      } else {
        if (dinv_lens->count("p") == 0 || dinv_lens->count("q") == 0) throw Error(ErrorKind::InvalidArgument, "need P and Q, or --max-n");
        const auto lens = LensSpace::make(lens_p, lens_q, orientation);
        tables.emplace_back(lens.q, d_lens_table(lens));
      }
      if (!out_path.empty()) write_csv(out_path, tables);
      if (common.json) {
        Json all = Json::array();
        for (const auto& [q, t] : tables) all.push_back(table_json(t));
        std::cout << render(tables.size() == 1 ? all[0] : all);
      } else if (out_path.empty()) {
        for (const auto& [q, t] : tables) print_table(t);
      }
      return kOk;
    }

    if (*dinv_surgery) {
      const KnotModel k = load_knot(knot_path);
      const auto vs = v_sequence(k);
      for (const auto& w : vs.warnings) std::cerr << "warning: " << w << "\n";
      std::vector<std::pair<std::int64_t, DInvariantTable>> tables;
      if (max_n > 0) {
        for (std::int64_t n = 1; n <= max_n; ++n) tables.emplace_back(1, d_table(vs.sequence, n, k.name));
      } else {
        if (slope_arg.empty()) throw Error(ErrorKind::InvalidArgument, "need --slope or --max-n");
        const Slope s = parse_slope(slope_arg);
        tables.emplace_back(s.q, s.q == 1 ? d_table(vs.sequence, s.p, k.name) : d_surgery_table(vs.sequence, s.p, s.q, k.name));
      }
      if (!out_path.empty()) write_csv(out_path, tables);
      if (common.json) {
        Json all = Json::array();
        for (const auto& [q, t] : tables) all.push_back(table_json(t));
        std::cout << render(tables.size() == 1 ? all[0] : all);
      } else if (out_path.empty()) {
        for (const auto& [q, t] : tables) print_table(t);
      }
      return kOk;
    }

    if (*knot_vseq) {
      const auto vs = v_sequence(load_knot(knot_path));
      if (common.json) {
        std::cout << render(vsequence_json(vs));
      } else {
        std::cout << "g4 = " << vs.sequence.slice_genus() << "\nV =";
        for (const auto& v : vs.sequence.values()) std::cout << " " << v.get_str();
        std::cout << (vs.sequence.values().empty() ? " (all zero)\n" : "\n");
        for (const auto& w : vs.warnings) std::cout << "warning: " << w << "\n";
      }
      return kOk;
    }

    if (*knot_delta2) {
      const KnotModel k = load_knot(knot_path);
      if (!k.alexander) throw Error(ErrorKind::MissingVData, "knot has no Alexander polynomial");
      const Integer d2 = delta_second_derivative(*k.alexander);
      const IntVector t = torsion_coefficients(*k.alexander);
      if (common.json) {
        std::cout << render(Json{{"verdict", "computed"},
                                 {"mode", "delta2"},
                                 {"witness", nullptr},
                                 {"data", Json{{"delta2", d2.get_str()},
                                               {"torsion", detail::strings(t)},
                                               {"trivial", d2 == 0}}}});
      } else {
        std::cout << "Delta''(1) = " << d2.get_str() << "\nt =";
        for (const auto& x : t) std::cout << " " << x.get_str();
        std::cout << "\n";
        if (k.l_space) std::cout << (d2 == 0 ? "L-space knot with Delta''(1) = 0: unknot\n" : "L-space knot, not the unknot\n");
      }
      return kOk;
    }

    if (*lattice_analyze) {
      const GramLattice L = load_gram(gram_path);
      const Json doc = analysis_json(L);
      const bool violated = !doc["data"]["owens_strle"]["violations"].empty();
      if (common.json) {
        std::cout << render(doc);
      } else {
        const auto& d = doc["data"];
        std::cout << "rank " << d["rank"].get<std::size_t>() << ", det " << d["determinant"].get<std::string>() << "\n";
        std::cout << "discriminant group";
        if (d["invariant_factors"].empty()) std::cout << " trivial";
        for (const auto& f : d["invariant_factors"]) std::cout << " Z/" << f.get<std::string>();
        std::cout << "\nmin char norm " << d["min_char_norm"].get<std::string>() << " at (";
        for (std::size_t i = 0; i < doc["witness"].size(); ++i) std::cout << (i ? ", " : "") << doc["witness"][i].get<std::string>();
        std::cout << ")\n" << (d["standard"]["standard"].get<bool>() ? "Standard" : "NonStandard") << "\n";
        const auto& os = d["owens_strle"];
        std::cout << "bound " << os["bound"].get<std::string>() << (os["equality"].get<bool>() ? " attained" : " strict")
                  << ", congruence " << (os["congruent"].get<bool>() ? "holds" : "fails") << "\n";
        for (const auto& v : os["violations"]) std::cout << "VIOLATION: " << v.get<std::string>() << "\n";
      }
      return violated ? kFail : kOk;
    }

    if (*lattice_standard) {
      const GramLattice L = load_gram(gram_path);
      const auto v = split_standard(L);
      if (common.json) {
        std::cout << render(Json{{"verdict", v.standard ? "standard" : "non-standard"},
                                 {"mode", "standard"},
                                 {"witness", nullptr},
                                 {"data", standard_json(v)}});
      } else {
        std::cout << (v.standard ? "Standard: <1>^" + std::to_string(v.unit_splits) + " + <" + v.delta.get_str() + ">"
                                 : "NonStandard after splitting " + std::to_string(v.unit_splits) + " unit summand(s)")
                  << "\n";
      }
      return kOk;
    }

    if (*obstruct) {
      const GramLattice L = load_gram(gram_path);
      const KnotModel k = load_knot(knot_path);
      const Slope s = parse_slope(slope_arg);
      const ObstructionMode mode = parse_mode(mode_arg);
      const auto vs = v_sequence(k);
      for (const auto& w : vs.warnings) std::cerr << "warning: " << w << "\n";
      const DInvariantTable table = s.q == 1 ? d_table(vs.sequence, s.p, k.name) : d_surgery_table(vs.sequence, s.p, s.q, k.name);
      const ObstructionReport rep = lattice_obstruction(L, table, mode);
      Json doc = obstruction_json(rep);
      doc["data"]["slope"] = slope_text(s);
      doc["data"]["table"] = table.source;
      std::optional<StandardnessReport> st;
      if (s.q == 1) {
        st = standardness_verdict(k, s.p, L);
        doc["data"]["branch"] = to_string(st->branch);
        doc["data"]["threshold"] = st->threshold;
      }
      if (common.json) {
        std::cout << render(doc);
      } else {
        std::cout << "slope " << slope_text(s) << ", table " << table.source << "\n";
        print_obstruction(rep);
        if (st) std::cout << "standardness branch: " << to_string(st->branch) << " (threshold 4g4+3 = " << st->threshold << ")\n";
      }
      return rep.pass ? kOk : kFail;
    }

    if (*sharp) {
      const GramLattice L = load_gram(gram_path);
      const ObstructionMode mode = parse_mode(mode_arg);
      DInvariantTable table;
      if (!lens_pair.empty()) {
        table = d_lens_table(LensSpace::make(lens_pair[0], lens_pair[1])).reversed();
      } else if (!knot_path.empty()) {
        if (slope_arg.empty()) throw Error(ErrorKind::InvalidArgument, "--knot needs --slope N");
        const Slope s = parse_slope(slope_arg);
        if (s.q != 1) throw Error(ErrorKind::InvalidArgument, "sharpness needs an integer slope");
        const auto vs = v_sequence(load_knot(knot_path));
        table = d_table(vs.sequence, s.p).reversed();
      } else {
        throw Error(ErrorKind::InvalidArgument, "need --lens P Q or --knot FILE --slope N");
      }
      const ObstructionReport rep = sharpness_check(L, table, mode);
      Json doc = obstruction_json(rep);
      doc["data"]["table"] = table.source;
      if (common.json) {
        std::cout << render(doc);
      } else {
        std::cout << "table " << table.source << "\n";
        print_obstruction(rep);
      }
      return rep.pass ? kOk : kFail;
    }

    if (*lbound) {
      const KnotModel k = load_knot(knot_path);
      const auto vs = v_sequence(k);
      const auto failing = beta_failing_slopes(vs.sequence);
      const std::int64_t bound = failing.empty() ? 0 : failing.back();
      const std::int64_t top = std::max(max_n, genus_threshold(vs.sequence));
      Json rows = Json::array();
      for (std::int64_t n = 1; n <= top; ++n) {
        const auto b = beta_bound_check(vs.sequence, n);
        Json row{{"n", n}, {"beta", to_string(b.beta)}, {"min_4d", to_string(b.min_four_d)}, {"holds", b.holds}};
        if (b.failing_index) row["failing_index"] = *b.failing_index;
        rows.push_back(std::move(row));
      }
      if (common.json) {
        Json warnings = Json::array();
        for (const auto& w : vs.warnings) warnings.push_back(w);
        std::cout << render(Json{{"verdict", "computed"},
                                 {"mode", "lbound"},
                                 {"witness", failing.empty() ? Json(nullptr) : Json(bound)},
                                 {"data", Json{{"l_upper_bound", bound},
                                               {"genus_threshold", genus_threshold(vs.sequence)},
                                               {"slopes", std::move(rows)},
                                               {"warnings", std::move(warnings)}}}});
      } else {
        std::cout << k.name << ": l(K) <= " << bound << " (4g4+3 = " << genus_threshold(vs.sequence) << ")\n";
        std::cout << "  n  beta  min 4d  bound\n";
        for (const auto& row : rows)
          std::cout << "  " << row["n"].get<std::int64_t>() << "  " << row["beta"].get<std::string>() << "  "
                    << row["min_4d"].get<std::string>() << "  " << (row["holds"].get<bool>() ? "holds" : "fails") << "\n";
      }
      return kOk;
    }

    if (*verify_suite) {
      bool all = true;
      Json results = Json::array();
      verify::run_all([&](const verify::CriterionResult& r) {
        all = all && r.pass;
        if (common.json) {
          results.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
          std::cout << verify::format(r) << std::endl;
        }
      });
      if (common.json) {
        std::cout << render(Json{{"verdict", all ? "pass" : "fail"}, {"mode", "verify-suite"}, {"witness", nullptr}, {"data", results}});
      }
      return all ? kOk : kFail;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::AssertionViolated ? kFail : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
