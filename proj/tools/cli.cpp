/*
 * Copyright 2026 The smdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>

#include "smdec/design.hpp"
#include "smdec/error.hpp"
#include "smdec/freq.hpp"
#include "smdec/io.hpp"
#include "smdec/loops.hpp"
#include "smdec/sim.hpp"
#include "smdec/smith_mcmillan.hpp"
#include "smdec/stability.hpp"
#include "smdec/tfm.hpp"

namespace smdec::cli {

namespace fs = std::filesystem;

namespace {

struct SessionConfig {
  double freq_min_hz = 1e-2;
  double freq_max_hz = 1e2;
  int points_per_decade = kDefaultPointsPerDecade;
  double pole_tol = kDefaultPoleTol;
  std::string out;

  FrequencyGrid grid() const {
    return FrequencyGrid::log_hz(freq_min_hz, freq_max_hz, points_per_decade);
  }
  void validate() const {
    if (!(pole_tol > 0)) throw Error(ErrorCode::kInvalidArgument, "--pole-tol must be positive");
    if (!(freq_min_hz > 0) || !(freq_max_hz > freq_min_hz)) {
      throw Error(ErrorCode::kInvalidArgument, "frequency range must be positive and ascending");
    }
  }
};

void add_grid_flags(CLI::App* cmd, SessionConfig& cfg) {
  cmd->add_option("--freq-min-hz", cfg.freq_min_hz, "Lowest grid frequency (Hz)")->capture_default_str();
  cmd->add_option("--freq-max-hz", cfg.freq_max_hz, "Highest grid frequency (Hz)")->capture_default_str();
  cmd->add_option("--points-per-decade", cfg.points_per_decade, "Log grid density")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

fs::path ensure_dir(const std::string& dir) {
  const fs::path p = dir.empty() ? fs::path(".") : fs::path(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw Error(ErrorCode::kInvalidArgument, "cannot create " + p.string() + ": " + ec.message());
  return p;
}

void emit(std::ostream& out, const std::string& path, const Json& j) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

std::string csv_of(const BodeTable& t) {
  std::ostringstream os;
  write_bode_csv(os, t);
  return os.str();
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kNonConvergence: return kExitNonConvergence;
    case ErrorCode::kUnstable:
    case ErrorCode::kIllPosed: return kExitPropertyFail;
    default: return kExitInputError;
  }
}

// smith --plant P.json
int cmd_smith(const std::string& plant_path, const SessionConfig& cfg) {
  const TransferMatrix p = transfer_matrix_from_json(read_json_file(plant_path));
  const SmDecomposition dec = smith_mcmillan(p);
  const SmCertificate cert = certify(dec, p);
  const fs::path dir = ensure_dir(cfg.out);
  write_json_file(dir / "U.json", to_json(dec.U));
  write_json_file(dir / "V.json", to_json(dec.V));
  write_json_file(dir / "psm.json", to_json(dec.diagonal_matrix()));
  write_json_file(dir / "certificate.json", to_json(cert));
  return cert.ok() ? kExitPass : kExitPropertyFail;
}

// stability --plant P.json --controller C.json
int cmd_stability(std::ostream& out, const std::string& plant_path, const std::string& ctrl_path,
                  const SessionConfig& cfg) {
  const TransferMatrix p = transfer_matrix_from_json(read_json_file(plant_path));
  const TransferMatrix c = transfer_matrix_from_json(read_json_file(ctrl_path));
  const StabilityReport r = check_internal_stability(p, c, cfg.pole_tol);
  emit(out, cfg.out, to_json(r));
  return r.stable() ? kExitPass : kExitPropertyFail;
}

struct PerfArgs {
  std::string plant, controller, weight, u;
  std::string sensitivity = "S";
  std::string bound = "original";
};

// perf: original-domain check on (P, C), or the sufficient bound on the
// essential pair (Psm, Csm) with --u.
int cmd_perf(std::ostream& out, const PerfArgs& a, const SessionConfig& cfg) {
  const TransferMatrix p = transfer_matrix_from_json(read_json_file(a.plant));
  const TransferMatrix c = transfer_matrix_from_json(read_json_file(a.controller));
  const RatFunc w = ratfunc_from_json(read_json_file(a.weight));
  const StabilityReport rep = check_internal_stability(p, c, cfg.pole_tol);
  if (!rep.stable()) {
    throw Error(ErrorCode::kUnstable, std::string("loop is not internally stable (verdict ") +
                                          to_string(rep.verdict) + ")");
  }
  const ClosedLoopSet loops = gang_of_six(p, c);
  const TransferMatrix& m = a.sensitivity == "T" ? loops.T : loops.S;
  const FrequencyGrid grid = cfg.grid();
  Json report;
  std::ostringstream csv;
  bool pass = false;
  if (a.bound == "essential") {
    if (a.u.empty()) throw Error(ErrorCode::kInvalidArgument, "--bound essential needs --u");
    const PolyMatrix u = poly_matrix_from_json(read_json_file(a.u));
    const BoundResult r = essential_bound_check(m, w, u, grid);
    pass = r.pass;
    report = to_json(r);
    csv << "freq_hz,lhs,rhs\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      csv << format_double(grid.hz(k)) << ',' << format_double(r.lhs.values[k]) << ','
          << format_double(r.rhs.values[k]) << '\n';
    }
  } else {
    const PerformanceResult r = performance_check_original(m, w, grid);
    pass = r.pass;
    report = to_json(r);
    csv << "freq_hz,sigma_weighted\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      csv << format_double(grid.hz(k)) << ',' << format_double(r.curve.values[k]) << '\n';
    }
  }
  report["sensitivity"] = a.sensitivity;
  report["bound"] = a.bound;
  if (cfg.out.empty()) {
    report.erase("curve");
    out << report.dump(2) << '\n';
  } else {
    const fs::path dir = ensure_dir(cfg.out);
    write_json_file(dir / "perf.json", report);
    write_text_file(dir / "curve.csv", csv.str());
  }
  return pass ? kExitPass : kExitPropertyFail;
}

Json design_summary(const ExampleDesign& d, const TransferMatrix& psm, const PolyMatrix& u,
                    const PolyMatrix& v, const FrequencyGrid& grid, double pole_tol) {
  Json j;
  Json xo = Json::array();
  for (std::size_t k = 0; k < 2; ++k) {
    const RatFunc l = psm(k, k) * d.csm()(k, k);
    Json cs = Json::array();
    for (double f : gain_crossovers_hz(l, grid)) cs.push_back(f);
    xo.push_back(std::move(cs));
  }
  j["essential_crossovers_hz"] = std::move(xo);
  const Theorem1Result th = theorem1_harness(psm, d.csm(), u, v, pole_tol);
  j["essential_verdict"] = to_string(th.essential.verdict);
  j["original_verdict"] = to_string(th.original.verdict);
  const IdentityReport ids = verify_transform_identities(psm, d.csm(), u, v);
  j["identities"] = to_json(ids);
  j["printed_s_pi_form"] = ids.extra_p_variant_equal ? "exact-equal" : "mismatch";
  j["t_equals_tsm"] = ids.t_equals_tsm;
  const TransferMatrix c = controller_backmap(d.csm(), u, v);
  j["controller_proper"] = c.is_proper();
  const ClosedLoopSet loops = gang_of_six(plant_backmap(psm, u, v), c);
  Json norms = Json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      const NormEstimate e = hinf_norm_estimate(TransferMatrix{{loops.T(i, k)}}, grid);
      norms.push_back({{"entry", "T" + std::to_string(i + 1) + std::to_string(k + 1)},
                       {"value", e.value},
                       {"freq_hz", e.omega / kTwoPi},
                       {"semantics", to_string(e.semantics)}});
    }
  }
  j["t_entry_norms"] = std::move(norms);
  return j;
}

// example: the two-mass plant, its decomposition and both designs.
int cmd_example(std::ostream& out, const SessionConfig& cfg) {
  const fs::path dir = ensure_dir(cfg.out);
  const FrequencyGrid grid = cfg.grid();
  const TransferMatrix p = build_example_plant(MechParams::table_one());
  const SmDecomposition dec = smith_mcmillan(p);
  const PolyMatrix u = reference_u(), v = reference_v();
  const TransferMatrix psm = reference_psm();

  write_json_file(dir / "P.json", to_json(p));
  write_json_file(dir / "psm.json", to_json(psm));
  write_json_file(dir / "U.json", to_json(u));
  write_json_file(dir / "V.json", to_json(v));
  write_json_file(dir / "U_computed.json", to_json(dec.U));
  write_json_file(dir / "V_computed.json", to_json(dec.V));
  write_json_file(dir / "certificate_computed.json", to_json(certify(dec, p)));

  const ExampleDesign designs[] = {example_design1(), example_design2()};
  const RatFunc w(Poly{Rational(4, 5)});
  Json summary;
  summary["properness_min_reldeg"] = properness_min_reldeg(u, v);
  summary["reference_relation_exact"] =
      TransferMatrix(u) * p * TransferMatrix(v) == psm;
  summary["computed_diagonal_matches"] = dec.diagonal_matrix() == psm;

  std::vector<BoundResult> bounds;
  for (int k = 0; k < 2; ++k) {
    const ExampleDesign& d = designs[k];
    const std::string tag = "design" + std::to_string(k + 1);
    const TransferMatrix csm = d.csm();
    const TransferMatrix c = controller_backmap(csm, u, v);
    write_json_file(dir / ("csm_" + tag + ".json"), to_json(csm));
    write_json_file(dir / ("c_" + tag + ".json"), to_json(c));

    const ClosedLoopSet ess = gang_of_six(psm, csm);
    const ClosedLoopSet orig = gang_of_six(p, c);
    write_text_file(dir / ("lsm_" + tag + ".csv"), csv_of(bode_export(ess.L, grid)));
    write_text_file(dir / ("tsm_" + tag + ".csv"), csv_of(bode_export(ess.T, grid)));
    write_text_file(dir / ("t_" + tag + ".csv"), csv_of(bode_export(orig.T, grid)));

    std::ostringstream step;
    write_time_csv(step, step_response(orig.T, 1, linspace_time(5.0, 2001), cfg.pole_tol));
    write_text_file(dir / ("step_r2_" + tag + ".csv"), step.str());

    bounds.push_back(essential_bound_check(ess.T, w, u, grid));
    Json s = design_summary(d, psm, u, v, grid, cfg.pole_tol);
    s["essential_bound_pass"] = bounds.back().pass;
    s["original_performance_pass"] = performance_check_original(orig.T, w, grid).pass;
    summary[tag] = std::move(s);
  }

  std::ostringstream csv;
  csv << "freq_hz,bound,sigma_tsm_design1,sigma_tsm_design2\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    csv << format_double(grid.hz(k)) << ',' << format_double(bounds[0].rhs.values[k]) << ','
        << format_double(bounds[0].lhs.values[k]) << ',' << format_double(bounds[1].lhs.values[k])
        << '\n';
  }
  write_text_file(dir / "bound.csv", csv.str());
  summary["bound_at_lowest_freq"] = bounds[0].rhs.values.front();
  write_json_file(dir / "summary.json", summary);
  out << summary.dump(2) << '\n';
  return kExitPass;
}

}  // namespace

int run(const std::vector<const char*>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smith-McMillan decoupling toolkit for square MIMO plants"};
  app.require_subcommand(1);
  SessionConfig cfg;

  auto* smith = app.add_subcommand("smith", "Decompose a plant; writes U.json, V.json, psm.json, certificate.json");
  std::string plant, controller;
  smith->add_option("--plant", plant, "Plant transfer matrix JSON")->required();
  smith->add_option("--out", cfg.out, "Output directory")->capture_default_str();

  auto* stab = app.add_subcommand("stability", "Internal stability of a feedback loop");
  stab->add_option("--plant", plant, "Plant transfer matrix JSON")->required();
  stab->add_option("--controller", controller, "Controller transfer matrix JSON")->required();
  stab->add_option("--pole-tol", cfg.pole_tol, "Imaginary-axis band on pole real parts")->capture_default_str();
  stab->add_option("--out", cfg.out, "Report file (default stdout)");

  PerfArgs perf_args;
  auto* perf = app.add_subcommand("perf", "Weighted singular-value performance check");
  perf->add_option("--plant", perf_args.plant, "Plant (essential plant with --bound essential)")->required();
  perf->add_option("--controller", perf_args.controller, "Controller JSON")->required();
  perf->add_option("--weight", perf_args.weight, "Scalar weight JSON {num, den}")->required();
  perf->add_option("--sensitivity", perf_args.sensitivity, "Closed-loop map")
      ->check(CLI::IsMember({"S", "T"}))
      ->capture_default_str();
  perf->add_option("--bound", perf_args.bound, "Domain of the check")
      ->check(CLI::IsMember({"original", "essential"}))
      ->capture_default_str();
  perf->add_option("--u", perf_args.u, "Unimodular U JSON (essential bound)");
  perf->add_option("--pole-tol", cfg.pole_tol, "Imaginary-axis band on pole real parts")->capture_default_str();
  perf->add_option("--out", cfg.out, "Output directory for perf.json and curve.csv (default stdout summary)");
  add_grid_flags(perf, cfg);

  auto* example = app.add_subcommand("example", "Reproduce the two-mass example end to end");
  example->add_option("--out", cfg.out, "Output directory")->required();
  example->add_option("--pole-tol", cfg.pole_tol, "Imaginary-axis band on pole real parts")->capture_default_str();
  add_grid_flags(example, cfg);

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    cfg.validate();
    if (*smith) return cmd_smith(plant, cfg);
    if (*stab) return cmd_stability(out, plant, controller, cfg);
    if (*perf) return cmd_perf(out, perf_args, cfg);
    return cmd_example(out, cfg);
  } catch (const Error& e) {
    err << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitInputError;
  }
}

}  // namespace smdec::cli
