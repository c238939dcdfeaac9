// Command-line entry point: reads JSON problem files, dispatches to the
// library and emits JSON/CSV reports plus optional 2-D SVG overlays.
//
// Exit codes: 0 success, 1 input/usage error, 2 mathematical failure
// (non-convergence, certification failure).

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "equinorm/antipodal.hpp"
#include "equinorm/common.hpp"
#include "equinorm/fixedpoint.hpp"
#include "equinorm/pointset.hpp"
#include "equinorm/problem_io.hpp"
#include "equinorm/renorm.hpp"
#include "equinorm/suite.hpp"
#include "equinorm/svg.hpp"

namespace fs = std::filesystem;
using namespace equinorm;

namespace {

struct CliOptions {
  std::string input;
  std::string out_dir = ".";
  std::string format = "json";
  // Optional overrides for the problem-file parameters.
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_dirs;
  std::vector<std::string> criteria;  // suite only
};

void add_common_flags(CLI::App* cmd, CliOptions& opt, bool needs_input) {
  auto* input = cmd->add_option("--input", opt.input, "problem JSON file");
  if (needs_input) input->required()->check(CLI::ExistingFile);
  cmd->add_option("--out-dir", opt.out_dir, "directory for report files");
  cmd->add_option("--tol", opt.tol, "tolerance override");
  cmd->add_option("--max-iter", opt.max_iter, "iteration cap override");
  cmd->add_option("--seed", opt.seed, "seed override");
  cmd->add_option("--n-dirs", opt.n_dirs, "audit direction count override");
  cmd->add_option("--format", opt.format, "json, csv or svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
}

ProblemFile load_problem(const CliOptions& opt) {
  ProblemFile problem = problem_from_json(read_json_file(opt.input));
  if (opt.tol) problem.tol = *opt.tol;
  if (opt.max_iter) problem.max_iter = *opt.max_iter;
  if (opt.seed) problem.seed = *opt.seed;
  if (opt.n_dirs) problem.n_dirs = *opt.n_dirs;
  return problem;
}

Json resolved_config(const CliOptions& opt, const ProblemFile& problem) {
  return Json{{"input", opt.input},
              {"out_dir", opt.out_dir},
              {"format", opt.format},
              {"N", problem.n_points},
              {"tol", problem.tol},
              {"max_iter", problem.max_iter},
              {"seed", problem.seed},
              {"c2", problem.c2},
              {"n_dirs", problem.n_dirs}};
}

void emit(const CliOptions& opt, const std::string& name,
          const std::string& content) {
  fs::create_directories(opt.out_dir);
  const std::string path = (fs::path(opt.out_dir) / name).string();
  write_text_file(path, content);
  std::cout << "wrote " << path << "\n";
}

void emit_json(const CliOptions& opt, const std::string& name, const Json& j) {
  emit(opt, name, j.dump(2) + "\n");
}

int cmd_fixedpoint(const CliOptions& opt) {
  ProblemFile problem = load_problem(opt);
  FixedPointRun run = find_equilateral_c0(problem.norm, problem.n_points,
                                          problem.tol, problem.max_iter);
  Json report{{"version", kSchemaVersion},
              {"command", "fixedpoint"},
              {"config", resolved_config(opt, problem)},
              {"state", fixed_point_state_to_json(run.state)},
              {"points", point_set_to_json(run.points)},
              {"equilateral", equilateral_report_to_json(run.report)},
              // Finite runs witness an N-point equilateral set and nothing
              // more; they are evidence toward the infinite statement only.
              {"evidence",
               Json{{"n_points", problem.n_points},
                    {"label", "finite lower bound"}}}};
  emit_json(opt, "fixedpoint_report.json", report);
  if (opt.format == "csv") {
    Matrix d = pairwise_distance_matrix(problem.norm, run.points);
    emit(opt, "fixedpoint_distances.csv", matrix_to_csv(d, run.points.labels));
  }
  if (opt.format == "svg" && problem.norm->dim() == 2) {
    std::vector<SvgLayer> layers{{problem.norm, "#1f77b4", "unit ball"}};
    emit(opt, "fixedpoint_points.svg",
         render_ball_overlay(layers, &run.points));
  }
  if (run.state.status != FixedPointStatus::converged) {
    std::cerr << "fixed-point iteration did not converge within "
              << problem.max_iter << " iterations\n";
    return 2;
  }
  return 0;
}

int cmd_renorm(const CliOptions& opt) {
  ProblemFile problem = load_problem(opt);
  require(problem.points.has_value(),
          "renorm requires a \"points\" entry in the problem file");
  const NormPtr& spec = problem.norm;
  PointSet working = *problem.points;

  CertifyOptions certify_options;
  certify_options.tol = std::min(problem.tol, 1e-9);
  CertifyResult certified =
      certify_antipodal(spec, working, problem.c2, certify_options);
  if (!certified.ok()) {
    const CertifyFailure& f = *certified.failure;
    Json report{{"version", kSchemaVersion},
                {"command", "renorm"},
                {"config", resolved_config(opt, problem)},
                {"failure",
                 Json{{"i", f.i},
                      {"j", f.j},
                      {"labels",
                       Json::array({working.labels[std::size_t(f.i)],
                                    working.labels[std::size_t(f.j)]})},
                      {"delta", f.delta},
                      {"reason", f.reason}}}};
    emit_json(opt, "renorm_report.json", report);
    std::cerr << "certification failed on pair (" << f.i << ", " << f.j
              << "): " << f.reason << "\n";
    return 2;
  }

  AntipodalCertificate cert = *certified.certificate;
  Json report{{"version", kSchemaVersion},
              {"command", "renorm"},
              {"config", resolved_config(opt, problem)}};
  if (std::abs(cert.c1 - 1.0) > 1e-9) {
    // Rescaling by 1/c1 turns (c1, c2, d) into (1, c2, d/c1) on the scaled
    // points, which is what the renorm construction requires.
    const double lambda = 1.0 / cert.c1;
    for (Vector& x : working.points) x *= lambda;
    cert = rescale_certificate(cert, lambda, RescaleMode::scale_points);
    report["rescaled_by"] = lambda;
  }

  RenormOptions options;
  options.tol = problem.tol;
  options.n_dirs = problem.n_dirs;
  options.seed = problem.seed;
  RenormResult result = build_antipodal_renorm(spec, working, cert, options);

  report["certificate"] = certificate_to_json(cert);
  report["renorm"] = renorm_result_to_json(result);
  report["points"] = point_set_to_json(working);
  emit_json(opt, "renorm_report.json", report);
  emit_json(opt, "renorm_certificate.json", certificate_to_json(cert));
  emit_json(opt, "renorm_audit.json",
            Json{{"version", kSchemaVersion},
                 {"distortion_bound", result.distortion_bound},
                 {"rho", result.rho},
                 {"audit", sandwich_audit_to_json(result.audit)}});
  Matrix d = pairwise_distance_matrix(result.new_norm, working);
  emit(opt, "renorm_distances.csv", matrix_to_csv(d, working.labels));

  if (opt.format == "svg" && spec->dim() == 2) {
    std::vector<SvgLayer> layers{{spec, "#1f77b4", "original ball"},
                                 {result.new_norm, "#d62728", "K"}};
    emit(opt, "renorm_overlay.svg", render_ball_overlay(layers, &working));
  }
  return 0;
}

int cmd_suite(const CliOptions& opt) {
  std::vector<std::string> names = opt.criteria;
  if (!opt.input.empty()) {
    Json config = read_json_file(opt.input);
    if (config.contains("criteria")) {
      require(config["criteria"].is_array(),
              "suite config: \"criteria\" must be an array of names");
      for (const Json& name : config["criteria"])
        names.push_back(name.get<std::string>());
    }
  }
  std::vector<CriterionResult> results = run_suite(names);
  Json aggregate{{"version", kSchemaVersion},
                 {"command", "suite"},
                 {"criteria", Json::array()}};
  bool all_pass = true;
  for (const CriterionResult& r : results) {
    all_pass = all_pass && r.pass;
    Json one{{"name", r.name},
             {"pass", r.pass},
             {"seconds", r.seconds},
             {"details", r.details}};
    emit_json(opt, "criterion_" + r.name + ".json", one);
    aggregate["criteria"].push_back(one);
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " ("
              << r.seconds << "s)\n";
  }
  aggregate["all_pass"] = all_pass;
  emit_json(opt, "suite_report.json", aggregate);
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilateral and antipodal point-set toolkit"};
  app.require_subcommand(1);

  CliOptions fixed_opt;
  CLI::App* fixed = app.add_subcommand(
      "fixedpoint", "run the c0-style fixed-point equilateral construction");
  add_common_flags(fixed, fixed_opt, true);

  CliOptions renorm_opt;
  CLI::App* renorm = app.add_subcommand(
      "renorm", "certify an antipodal set and build the hull-gauge renorming");
  add_common_flags(renorm, renorm_opt, true);

  CliOptions suite_opt;
  CLI::App* suite = app.add_subcommand(
      "suite", "run the acceptance criteria battery");
  add_common_flags(suite, suite_opt, false);
  suite->add_option("criteria", suite_opt.criteria,
                    "criterion names (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 reports success (--help) as 0; any parse failure is a usage error.
    return code == 0 ? 0 : 1;
  }

  const std::function<int()> dispatch = [&]() -> std::function<int()> {
    if (fixed->parsed()) return [&] { return cmd_fixedpoint(fixed_opt); };
    if (renorm->parsed()) return [&] { return cmd_renorm(renorm_opt); };
    return [&] { return cmd_suite(suite_opt); };
  }();

  try {
    return dispatch();
  } catch (const invalid_input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
