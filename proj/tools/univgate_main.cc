// univgate: command-line front end for the universality checks.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "univgate/beamsplitter.h"
#include "univgate/commutant.h"
#include "univgate/engine.h"
#include "univgate/errors.h"
#include "univgate/gate_io.h"
#include "univgate/spectra.h"
#include "univgate/su2.h"

namespace {

using nlohmann::json;
using namespace univgate;

constexpr int kExitInputError = 2;
constexpr int kExitMismatch = 1;

struct GlobalFlags {
  std::string profile = "default";
  int max_length = 20;
  std::int64_t ng_override = 0;
  bool json = false;
  int jobs = 1;
};

int exit_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kUniversal: return 0;
    case VerdictStatus::kFinite: return 10;
    case VerdictStatus::kCommutantObstruction: return 11;
    case VerdictStatus::kInconclusive: return 12;
  }
  return 12;
}

EngineConfig engine_config(const GlobalFlags& f, Group group, int d) {
  EngineConfig cfg;
  cfg.tol = Tolerances::from_profile(f.profile);
  cfg.max_length = f.max_length;
  if (f.ng_override > 0) {
    NgConfig ng;
    ng.group = group;
    ng.d = d;
    ng.value = f.ng_override;
    ng.source = NgSource::kUserOverride;
    cfg.ng = ng;
  }
  return cfg;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void print_verdict(const UniversalityVerdict& v) {
  std::cout << "verdict: " << verdict_status_name(v.status);
  if (v.group_label) std::cout << " (" << *v.group_label << ")";
  if (v.order) std::cout << ", order " << *v.order;
  std::cout << "\n";
  std::cout << "decided at step " << v.step << ", l = " << v.termination_l << "\n";
  std::cout << "commutant dimension: " << v.commutant_dim << "\n";
  std::cout << "N_G: " << v.n_g_used << " (" << ng_source_name(v.ng_source) << ")\n";
  if (v.witness) {
    std::cout << "witness: (";
    for (std::size_t i = 0; i < v.witness->word.size(); ++i) {
      std::cout << (i ? " " : "") << v.generator_names[v.witness->word[i]];
    }
    std::cout << ")^" << v.witness->power << " near " << v.witness->center << "\n";
  }
  for (const auto& e : v.trace) {
    std::cout << "  [l=" << e.l << " step " << e.step << "] " << e.message << "\n";
  }
}

int emit_verdict(const std::string& kind, const UniversalityVerdict& v,
                 double ms, const GlobalFlags& f, json extra = json::object()) {
  if (f.json) {
    json body = verdict_to_json(v);
    body["timings"] = {{"total_ms", ms}};
    for (auto it = extra.begin(); it != extra.end(); ++it) body[it.key()] = it.value();
    std::cout << make_report(kind, body).dump(2) << "\n";
  } else {
    print_verdict(v);
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      std::cout << it.key() << ": " << it.value().dump() << "\n";
    }
    std::cout << "time: " << ms << " ms\n";
  }
  return exit_code(v.status);
}

int cmd_check(const std::string& path, const GlobalFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  const Tolerances tol = Tolerances::from_profile(f.profile);
  const GateSetDocument doc = load_gate_set(path, tol);
  const UniversalityVerdict v =
      decide_universality(doc.gates, engine_config(f, doc.group, doc.dim));
  return emit_verdict("check", v, elapsed_ms(start), f);
}

int cmd_commutant(const std::string& path, const GlobalFlags& f) {
  const Tolerances tol = Tolerances::from_profile(f.profile);
  const GateSetDocument doc = load_gate_set(path, tol);
  const CommutantReport r = check_necessary_condition(doc.gates, tol);
  if (f.json) {
    json body;
    body["commutant_dim"] = r.dim;
    body["gap"] = std::isfinite(r.gap) ? json(r.gap) : json(nullptr);
    body["ill_conditioned"] = r.ill_conditioned;
    body["singular_values"] = r.singular_values;
    std::cout << make_report("commutant", body).dump(2) << "\n";
  } else {
    std::cout << "commutant dimension: " << r.dim << "\n"
              << "singular value gap: " << r.gap
              << (r.ill_conditioned ? " (ill-conditioned)" : "") << "\n";
  }
  return 0;
}

int cmd_ng(const std::string& group_text, int d, const std::string& mode,
           int divisions, const GlobalFlags& f) {
  Group group;
  if (group_text == "SU") group = Group::kSU;
  else if (group_text == "SO") group = Group::kSO;
  else throw Error(ErrorCode::kBadArgument, "group must be SU or SO");
  NgConfig ng;
  if (mode == "default") {
    ng = default_ng(group, d);
  } else {
    NgSource source = NgSource::kExact;
    if (mode == "analytic") source = NgSource::kAnalyticBound;
    else if (mode == "numeric") source = NgSource::kNumericEstimate;
    else if (mode != "exact") throw Error(ErrorCode::kBadArgument, "unknown mode " + mode);
    NumericEstimateOptions opts;
    opts.divisions = divisions;
    opts.jobs = f.jobs;
    opts.tol = Tolerances::from_profile(f.profile);
    ng = ng_constant(group, d, source, opts);
  }
  if (f.json) {
    json body;
    body["group"] = group_text;
    body["d"] = d;
    body["value"] = ng.value;
    body["source"] = ng_source_name(ng.source);
    body["flagged"] = ng.flagged;
    body["note"] = ng.note;
    std::cout << make_report("ng", body).dump(2) << "\n";
  } else {
    std::cout << "N_G(" << group_text << "(" << d << ")) = " << ng.value << " ["
              << ng_source_name(ng.source) << "]";
    if (!ng.note.empty()) std::cout << " " << ng.note;
    std::cout << "\n";
  }
  return 0;
}

std::string row_label(const Table1Row& r) {
  std::ostringstream os;
  os << (r.l ? std::to_string(*r.l) : std::string("-")) << "\t" << r.step << "\t"
     << r.count << "\t" << r.group_label;
  return os.str();
}

json rows_json(const std::vector<Table1Row>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"l", r.l ? json(*r.l) : json(nullptr)},
                   {"step", r.step},
                   {"count", r.count},
                   {"group", r.group_label}});
  }
  return out;
}

int cmd_table1(const GlobalFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  EngineConfig cfg = engine_config(f, Group::kSU, 2);
  const auto records = enumerate_triplets(f.jobs, cfg);
  const auto rows = aggregate_table1(records);
  const auto expected = expected_table1();
  std::size_t feasible = 0;
  for (const auto& r : records) feasible += r.feasible;
  bool match = rows.size() == expected.size();
  for (std::size_t i = 0; match && i < rows.size(); ++i) {
    match = rows[i].l == expected[i].l && rows[i].step == expected[i].step &&
            rows[i].count == expected[i].count &&
            rows[i].group_label == expected[i].group_label;
  }
  const double ms = elapsed_ms(start);
  if (f.json) {
    json body;
    body["triplets"] = records.size();
    body["feasible"] = feasible;
    body["rows"] = rows_json(rows);
    body["expected"] = rows_json(expected);
    body["match"] = match;
    body["timings"] = {{"total_ms", ms}};
    std::cout << make_report("table1", body).dump(2) << "\n";
  } else {
    std::cout << "triplets: " << records.size() << ", feasible: " << feasible << "\n";
    std::cout << "l\tstep\tcount\tgroup\n";
    for (const auto& r : rows) std::cout << row_label(r) << "\n";
    if (!match) {
      std::cout << "expected:\n";
      for (const auto& r : expected) std::cout << row_label(r) << "\n";
    }
    std::cout << (match ? "matches the published table" : "MISMATCH") << "\n";
    std::cout << "time: " << ms << " ms\n";
  }
  return match ? 0 : kExitMismatch;
}

int cmd_beamsplitter(const std::string& matrix_path, const std::string& phi_text,
                     const std::vector<double>& axis, const std::string& group_text,
                     int modes, bool full_engine, const GlobalFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  const Tolerances tol = Tolerances::from_profile(f.profile);
  Beamsplitter bs;
  if (!matrix_path.empty()) {
    const GateSetDocument doc = load_gate_set(matrix_path, tol);
    if (doc.dim != 2 || doc.gates.size() != 1) {
      throw Error(ErrorCode::kBadArgument, "beamsplitter file must hold one 2x2 gate");
    }
    bs = make_beamsplitter(Eigen::Matrix2cd(doc.gates[0].entries()), doc.group, modes, tol);
  } else {
    if (phi_text.empty()) throw Error(ErrorCode::kBadArgument, "give --matrix or --phi");
    const ParsedAngle angle = parse_angle(phi_text);
    if (group_text == "SO") {
      bs = make_orthogonal_beamsplitter(angle.radians, modes);
    } else if (group_text == "SU") {
      if (axis.size() != 3) throw Error(ErrorCode::kBadArgument, "--axis needs x,y,z");
      const Eigen::Vector3d k(axis[0], axis[1], axis[2]);
      if (k.norm() < 1e-12) throw Error(ErrorCode::kBadArgument, "axis must be nonzero");
      bs = make_beamsplitter(angle.exact ? AxisAngleGate::su2(*angle.exact, k)
                                         : AxisAngleGate::su2(angle.radians, k),
                             modes);
    } else {
      throw Error(ErrorCode::kBadArgument, "group must be SU or SO");
    }
  }
  BeamsplitterOptions opts;
  opts.engine = engine_config(f, bs.group, full_engine ? modes : 3);
  opts.full_engine = full_engine;
  const UniversalityVerdict v = beamsplitter_universal(bs, opts);
  const FamilyReport fam = obstruction_family(bs);
  json extra;
  extra["family"] = obstruction_family_name(fam.family);
  extra["borderline"] = fam.borderline;
  extra["modes"] = modes;
  return emit_verdict("beamsplitter", v, elapsed_ms(start), f, extra);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universality checks for finite gate sets in SU(d) and SO(d)"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_option("--tolerance-profile", flags.profile, "strict, default or loose")
      ->envname("UNIVGATE_TOLERANCE_PROFILE");
  app.add_option("--max-length", flags.max_length, "longest word length explored")
      ->envname("UNIVGATE_MAX_LENGTH")
      ->check(CLI::PositiveNumber);
  app.add_option("--ng-override", flags.ng_override, "use this N_G instead of the default")
      ->envname("UNIVGATE_NG_OVERRIDE")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", flags.json, "machine-readable report")->envname("UNIVGATE_JSON");
  app.add_option("--jobs", flags.jobs, "worker threads")
      ->envname("UNIVGATE_JOBS")
      ->check(CLI::PositiveNumber);

  std::string path;
  auto* check = app.add_subcommand("check", "decide universality of a gate-set file");
  check->add_option("file", path, "gate-set document")->required();

  auto* table1 = app.add_subcommand("table1", "classify the exceptional SU(2) triplets");

  std::string matrix_path, phi_text, group_text = "SU";
  std::vector<double> axis;
  int modes = 3;
  bool full_engine = false;
  auto* bs = app.add_subcommand("beamsplitter", "universality of a 2-mode beamsplitter");
  bs->add_option("--matrix", matrix_path, "gate-set file holding one 2x2 gate");
  bs->add_option("--phi", phi_text, "angle, e.g. \"1/3 pi\" or 0.7");
  bs->add_option("--axis", axis, "unit axis x,y,z (SU)")->delimiter(',')->expected(3);
  bs->add_option("--group", group_text, "SU or SO")->check(CLI::IsMember({"SU", "SO"}));
  bs->add_option("--modes", modes, "number of modes d >= 3")->check(CLI::Range(3, 64));
  bs->add_flag("--full-engine", full_engine, "run the engine on all d modes");

  std::string ng_group;
  int ng_d = 2;
  std::string ng_mode = "default";
  int divisions = 2000;
  auto* ng = app.add_subcommand("ng", "print N_G for SU(d) or SO(d)");
  ng->add_option("group", ng_group, "SU or SO")->required();
  ng->add_option("d", ng_d, "dimension")->required();
  ng->add_option("--mode", ng_mode, "default, exact, analytic or numeric")
      ->check(CLI::IsMember({"default", "exact", "analytic", "numeric"}));
  ng->add_option("--divisions", divisions, "grid divisions of pi (numeric mode)")
      ->check(CLI::PositiveNumber);

  std::string comm_path;
  auto* comm = app.add_subcommand("commutant", "commutant dimension of a gate set");
  comm->add_option("file", comm_path, "gate-set document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (*check) return cmd_check(path, flags);
    if (*table1) return cmd_table1(flags);
    if (*bs) {
      return cmd_beamsplitter(matrix_path, phi_text, axis, group_text, modes,
                              full_engine, flags);
    }
    if (*ng) return cmd_ng(ng_group, ng_d, ng_mode, divisions, flags);
    if (*comm) return cmd_commutant(comm_path, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
