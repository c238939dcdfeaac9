#include "equinorm/problem_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace equinorm {

Json point_set_to_json(const PointSet& s) {
  Json j;
  Json pts = Json::array();
  for (const Vector& p : s.points) pts.push_back(vector_to_json(p));
  j["points"] = pts;
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

PointSet point_set_from_json(const Json& j) {
  require(j.is_object() && j.contains("points"),
          "point set: missing field \"points\"");
  const Json& pts = j.at("points");
  require(pts.is_array() && !pts.empty(),
          "point set: \"points\" must be a nonempty array");
  PointSet s;
  for (std::size_t k = 0; k < pts.size(); ++k)
    s.points.push_back(
        vector_from_json(pts[k], "points[" + std::to_string(k) + "]"));
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    require(labels.is_array(), "point set: \"labels\" must be an array");
    for (const Json& l : labels) {
      require(l.is_string(), "point set: labels must be strings");
      s.labels.push_back(l.get<std::string>());
    }
  }
  validate_point_set(s);
  return s;
}

Json functional_to_json(const DualFunctional& f) {
  Json j;
  j["coeffs"] = vector_to_json(f.coeffs);
  j["dual_bound"] = f.dual_bound;
  return j;
}

DualFunctional functional_from_json(const Json& j) {
  require(j.is_object() && j.contains("coeffs"),
          "functional: missing field \"coeffs\"");
  DualFunctional f;
  f.coeffs = vector_from_json(j.at("coeffs"), "coeffs");
  if (j.contains("dual_bound")) {
    require(j["dual_bound"].is_number(),
            "functional: dual_bound must be a number");
    f.dual_bound = j["dual_bound"].get<double>();
  }
  return f;
}

Json certificate_to_json(const AntipodalCertificate& cert) {
  Json j;
  j["version"] = kSchemaVersion;
  j["c1"] = cert.c1;
  j["c2"] = cert.c2;
  j["d"] = cert.d;
  Json pairs = Json::array();
  for (const PairCertificate& p : cert.pairs) {
    Json jp;
    jp["i"] = p.i;
    jp["j"] = p.j;
    jp["f"] = functional_to_json(p.f);
    jp["margin"] = p.margin;
    jp["slack_lo"] = p.slack_lo;
    jp["slack_hi"] = p.slack_hi;
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = pairs;
  return j;
}

AntipodalCertificate certificate_from_json(const Json& j) {
  require(j.is_object(), "certificate: expected a JSON object");
  AntipodalCertificate cert;
  for (const char* key : {"c1", "c2", "d"}) {
    require(j.contains(key) && j.at(key).is_number(),
            std::string("certificate: missing numeric field \"") + key + "\"");
  }
  cert.c1 = j.at("c1").get<double>();
  cert.c2 = j.at("c2").get<double>();
  cert.d = j.at("d").get<double>();
  require(j.contains("pairs") && j.at("pairs").is_array(),
          "certificate: missing array field \"pairs\"");
  for (const Json& jp : j.at("pairs")) {
    PairCertificate p;
    require(jp.contains("i") && jp.contains("j") && jp.contains("f"),
            "certificate pair: need fields i, j, f");
    p.i = jp.at("i").get<int>();
    p.j = jp.at("j").get<int>();
    p.f = functional_from_json(jp.at("f"));
    if (jp.contains("margin")) p.margin = jp.at("margin").get<double>();
    if (jp.contains("slack_lo")) p.slack_lo = jp.at("slack_lo").get<double>();
    if (jp.contains("slack_hi")) p.slack_hi = jp.at("slack_hi").get<double>();
    cert.pairs.push_back(std::move(p));
  }
  return cert;
}

Json equilateral_report_to_json(const EquilateralReport& report) {
  Json j;
  j["version"] = kSchemaVersion;
  j["lambda"] = report.lambda;
  j["max_abs_deviation"] = report.max_abs_deviation;
  j["equilateral"] = report.equilateral;
  j["tol"] = report.tol;
  j["deviations"] = matrix_rows_to_json(report.deviations);
  return j;
}

Json fixed_point_state_to_json(const FixedPointState& state) {
  Json j;
  j["version"] = kSchemaVersion;
  j["n_points"] = state.n_points;
  j["eps"] = vector_to_json(state.eps);
  j["residuals"] = state.residuals;
  j["iterations"] = state.iterations;
  switch (state.status) {
    case FixedPointStatus::converged: j["status"] = "converged"; break;
    case FixedPointStatus::max_iter: j["status"] = "max_iter"; break;
    case FixedPointStatus::diverged: j["status"] = "diverged"; break;
  }
  return j;
}

Json sandwich_audit_to_json(const SandwichAudit& audit) {
  Json j;
  j["n_dirs"] = audit.n_dirs;
  j["seed"] = audit.seed;
  j["min_ratio"] = audit.min_ratio;
  j["max_ratio"] = audit.max_ratio;
  j["lower_bound"] = audit.lower_bound;
  j["upper_bound"] = audit.upper_bound;
  j["tol"] = audit.tol;
  j["pass"] = audit.pass;
  return j;
}

Json renorm_result_to_json(const RenormResult& result) {
  Json j;
  j["version"] = kSchemaVersion;
  j["new_norm"] = norm_to_json(result.new_norm);
  j["rho"] = result.rho;
  j["distortion_bound"] = result.distortion_bound;
  j["audit"] = sandwich_audit_to_json(result.audit);
  return j;
}

Json problem_to_json(const ProblemFile& problem) {
  Json j;
  j["version"] = kSchemaVersion;
  j["norm"] = norm_to_json(problem.norm);
  if (problem.points) j["points"] = point_set_to_json(*problem.points);
  Json params;
  params["N"] = problem.n_points;
  params["tol"] = problem.tol;
  params["max_iter"] = problem.max_iter;
  params["seed"] = problem.seed;
  params["c2"] = problem.c2;
  params["n_dirs"] = problem.n_dirs;
  j["params"] = params;
  return j;
}

ProblemFile problem_from_json(const Json& j) {
  require(j.is_object(), "problem: expected a JSON object");
  require(j.contains("norm"), "problem: missing field \"norm\"");
  ProblemFile problem;
  problem.norm = norm_from_json(j.at("norm"));
  if (j.contains("points")) {
    problem.points = point_set_from_json(j.at("points"));
    require(problem.points->dim() == problem.norm->dim(),
            "problem: points dimension " +
                std::to_string(problem.points->dim()) +
                " does not match norm dimension " +
                std::to_string(problem.norm->dim()));
  }
  if (j.contains("params")) {
    const Json& params = j.at("params");
    require(params.is_object(), "problem: \"params\" must be an object");
    auto read_int = [&](const char* key, int fallback, int lo) {
      if (!params.contains(key)) return fallback;
      require(params.at(key).is_number_integer(),
              std::string("problem params: \"") + key + "\" must be an integer");
      int value = params.at(key).get<int>();
      require(value >= lo, std::string("problem params: \"") + key +
                               "\" must be at least " + std::to_string(lo));
      return value;
    };
    problem.n_points = read_int("N", problem.n_points, 2);
    problem.max_iter = read_int("max_iter", problem.max_iter, 1);
    problem.n_dirs = read_int("n_dirs", problem.n_dirs, 1);
    if (params.contains("tol")) {
      require(params.at("tol").is_number() && params.at("tol").get<double>() > 0,
              "problem params: \"tol\" must be a positive number");
      problem.tol = params.at("tol").get<double>();
    }
    if (params.contains("c2")) {
      require(params.at("c2").is_number() && params.at("c2").get<double>() > 0,
              "problem params: \"c2\" must be a positive number");
      problem.c2 = params.at("c2").get<double>();
    }
    if (params.contains("seed")) {
      require(params.at("seed").is_number_unsigned() ||
                  params.at("seed").is_number_integer(),
              "problem params: \"seed\" must be a nonnegative integer");
      problem.seed = params.at("seed").get<std::uint64_t>();
    }
  }
  return problem;
}

std::string matrix_to_csv(const Matrix& m,
                          const std::vector<std::string>& labels) {
  require(labels.empty() || static_cast<Eigen::Index>(labels.size()) == m.cols(),
          "csv: label count does not match column count");
  std::ostringstream out;
  out.precision(17);
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (c) out << ",";
    out << labels[c];
  }
  if (!labels.empty()) out << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      out << m(r, c);
    }
    out << "\n";
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw invalid_input_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input_error("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw invalid_input_error("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace equinorm
