#include "equinorm/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "equinorm/antipodal.hpp"
#include "equinorm/biorthogonal.hpp"
#include "equinorm/common.hpp"
#include "equinorm/equilateral.hpp"
#include "equinorm/fixedpoint.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/oracles.hpp"
#include "equinorm/parallel.hpp"
#include "equinorm/pointset.hpp"
#include "equinorm/renorm.hpp"
#include "equinorm/rng.hpp"

namespace equinorm {
namespace {

constexpr std::uint64_t kSuiteSeed = 0x5eed;
const double kInf = std::numeric_limits<double>::infinity();
const double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Accumulates named checks; failures flip pass and are recorded verbatim.
struct Checker {
  bool pass = true;
  std::string details;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details += "FAIL: " + what + "; ";
    }
  }
  void note(const std::string& what) { details += what + "; "; }
};

NormPtr sup_norm(int n) { return make_lp_norm(n, kInf); }

// max((2/3) sup, (1/sqrt(n)) euclidean): satisfies the c0-sandwich
// |x| <= ||x||_inf <= (3/2)|x| with equality on sign vectors.
NormPtr mixed_norm(int n) {
  return make_max_norm({make_scaled_norm(2.0 / 3.0, sup_norm(n)),
                        make_scaled_norm(1.0 / std::sqrt(double(n)),
                                         make_lp_norm(n, 2.0))});
}

double max_distance_deviation(const NormPtr& spec, const PointSet& s,
                              double target) {
  double worst = 0.0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      worst = std::max(worst,
                       std::abs(norm_eval(spec, s.points[i] - s.points[j]) -
                                target));
  return worst;
}

// ---------------------------------------------------------------- criterion 1

CriterionResult criterion_fixedpoint() {
  Checker c;
  for (int variant = 0; variant < 2; ++variant) {
    for (int n : {8, 16, 32}) {
      const NormPtr spec = variant == 0 ? sup_norm(n) : mixed_norm(n);
      const char* tag = variant == 0 ? "sup" : "mixed";
      auto t0 = std::chrono::steady_clock::now();
      FixedPointRun run = find_equilateral_c0(spec, n, 1e-12, 2000);
      double dt = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      double dev = max_distance_deviation(spec, run.points, 1.0);
      std::string id = std::string(tag) + " N=" + std::to_string(n);
      c.check(run.state.status == FixedPointStatus::converged,
              id + " did not converge");
      c.check(dev < 1e-8, id + " deviation " + fmt(dev));
      c.check(dt < 10.0, id + " took " + fmt(dt) + "s");
      if (variant == 0) {
        double eps_sup = run.state.eps.size() == 0
                             ? 0.0
                             : run.state.eps.cwiseAbs().maxCoeff();
        c.check(eps_sup == 0.0, id + " sup-norm eps not identically zero");
      }
      c.note(id + " dev=" + fmt(dev) + " t=" + fmt(dt) + "s it=" +
             std::to_string(run.state.iterations));
    }
  }
  return {"fixedpoint-c0", c.pass, 0.0, c.details};
}

// ---------------------------------------------------------------- criterion 2

struct RenormCase {
  NormPtr spec;
  PointSet points;
  RenormResult result;
};

// Certifies the standard basis as antipodal and renorms; shared with
// criteria 3 and 8.
RenormCase renorm_basis(int n, double p) {
  RenormCase out;
  out.spec = make_lp_norm(n, p);
  out.points = standard_basis_set(n);
  CertifyResult cert = certify_antipodal(out.spec, out.points, 1.0);
  require(cert.ok(), "basis certification failed");
  RenormOptions options;
  options.seed = kSuiteSeed;
  out.result = build_antipodal_renorm(out.spec, out.points,
                                      *cert.certificate, options);
  return out;
}

CriterionResult criterion_renorm() {
  Checker c;
  for (double p : {2.0, kInf}) {
    for (int n = 2; n <= 6; ++n) {
      std::string id = (p == 2.0 ? "l2" : "linf") + std::string(" n=") +
                       std::to_string(n);
      RenormCase rc = renorm_basis(n, p);
      double dev = max_distance_deviation(rc.result.new_norm, rc.points, 1.0);
      c.check(dev <= 1e-6, id + " gauge distance deviation " + fmt(dev));
      const SandwichAudit& audit = rc.result.audit;
      c.check(audit.pass && audit.n_dirs == 1000,
              id + " sandwich audit failed [" + fmt(audit.min_ratio) + ", " +
                  fmt(audit.max_ratio) + "]");
      c.note(id + " dev=" + fmt(dev) + " ratios=[" + fmt(audit.min_ratio) +
             ", " + fmt(audit.max_ratio) + "] bound=" +
             fmt(rc.result.distortion_bound));
    }
  }
  return {"renorm-theorem3", c.pass, 0.0, c.details};
}

// ---------------------------------------------------------------- criterion 3

void petty_closure_check(Checker& c, const std::string& id, const NormPtr& spec,
                         const PointSet& s) {
  EquilateralReport report = verify_equilateral(spec, s, 1e-6);
  c.check(report.equilateral, id + " set not equilateral, deviation " +
                                  fmt(report.max_abs_deviation));
  if (!report.equilateral) return;
  AntipodalCertificate cert = petty_certificate(spec, s, 1e-6);
  c.check(std::abs(cert.d - report.lambda) <= 1e-6,
          id + " |d - lambda| = " + fmt(std::abs(cert.d - report.lambda)));
  CertificateAudit audit = verify_certificate(spec, s, cert, 1e-9);
  c.check(audit.ok, id + " certificate audit: " + audit.detail +
                        " min_slack=" + fmt(audit.min_slack));
  c.note(id + " lambda=" + fmt(report.lambda) + " min_slack=" +
         fmt(audit.min_slack));
}

CriterionResult criterion_petty() {
  Checker c;
  // Sets from criterion 1.
  for (int variant = 0; variant < 2; ++variant) {
    for (int n : {8, 16, 32}) {
      const NormPtr spec = variant == 0 ? sup_norm(n) : mixed_norm(n);
      FixedPointRun run = find_equilateral_c0(spec, n, 1e-12, 2000);
      std::string id = std::string(variant == 0 ? "sup" : "mixed") + " N=" +
                       std::to_string(n);
      petty_closure_check(c, id, spec, run.points);
    }
  }
  // Sets from criterion 2: the basis under the renormed gauge.
  for (double p : {2.0, kInf}) {
    for (int n = 2; n <= 6; ++n) {
      RenormCase rc = renorm_basis(n, p);
      std::string id = std::string("renormed ") + (p == 2.0 ? "l2" : "linf") +
                       " n=" + std::to_string(n);
      petty_closure_check(c, id, rc.result.new_norm, rc.points);
    }
  }
  // Numerically found sets.
  struct SearchCase {
    NormPtr spec;
    int n_points;
    const char* id;
  };
  const SearchCase cases[] = {
      {make_lp_norm(3, 2.0), 4, "search l2 simplex"},
      {make_lp_norm(2, kInf), 4, "search linf square"},
  };
  for (const SearchCase& sc : cases) {
    SearchResult found =
        search_equilateral(sc.spec, sc.n_points, sc.spec->dim(), kSuiteSeed);
    petty_closure_check(c, sc.id, sc.spec, found.points);
  }
  return {"petty-closure", c.pass, 0.0, c.details};
}

// ---------------------------------------------------------------- criterion 4

CriterionResult criterion_danzer() {
  Checker c;
  for (int n : {2, 3}) {
    const NormPtr spec = sup_norm(n);
    std::string id = "n=" + std::to_string(n);
    PointSet cube = hypercube_vertices(n);
    CertifyResult res = certify_antipodal(spec, cube, 1.0);
    c.check(res.ok(), id + " cube certification failed");
    if (res.ok()) {
      const AntipodalCertificate& cert = *res.certificate;
      c.check(std::abs(cert.d - 2.0) <= 1e-9,
              id + " cube d = " + fmt(cert.d));
      c.check(std::abs(cert.c1 - 1.0) <= 1e-12 &&
                  std::abs(cert.c2 - 1.0) <= 1e-12,
              id + " cube constants c1=" + fmt(cert.c1) + " c2=" +
                  fmt(cert.c2));
      CertificateAudit audit = verify_certificate(spec, cube, cert, 1e-9);
      c.check(audit.ok, id + " cube audit: " + audit.detail);
    }
    // One point beyond 2^n must always fail.
    const int overfull = (1 << n) + 1;
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Rng rng(kSuiteSeed + 1000 * n + trial);
      std::vector<Vector> pts(overfull);
      for (Vector& v : pts) v = rng.uniform_vector(n, -1.0, 1.0);
      CertifyResult res2 = certify_antipodal(spec, make_point_set(pts), 1.0);
      if (!res2.ok()) ++failures;
    }
    c.check(failures == 100, id + " only " + std::to_string(failures) +
                                 "/100 overfull sets rejected");
    c.note(id + " overfull rejected " + std::to_string(failures) + "/100");
  }
  return {"danzer-grunbaum", c.pass, 0.0, c.details};
}

// ---------------------------------------------------------------- criterion 5

CriterionResult criterion_oracles() {
  Checker c;
  // Hull gauges in the plane against the angular-sweep oracle.
  double worst_rel = 0.0;
  int gauge_queries = 0;
  for (int instance = 0; instance < 20; ++instance) {
    Rng rng(kSuiteSeed + 77 * instance);
    const int n_facets = 3 + int(rng.uniform_int(3));
    Matrix facets(n_facets, 2);
    for (int r = 0; r < n_facets; ++r) {
      double theta = 2.0 * kPi * (r + rng.uniform(0.1, 0.4)) / n_facets;
      double scale = rng.uniform(0.7, 1.5);
      facets(r, 0) = scale * std::cos(theta);
      facets(r, 1) = scale * std::sin(theta);
    }
    NormPtr ambient = make_polyhedral_norm(facets);
    const double rho = rng.uniform(0.4, 1.8);
    std::vector<Vector> gens(1 + rng.uniform_int(3));
    for (Vector& w : gens) w = 1.5 * rng.normal_vector(2);
    for (int q = 0; q < 50; ++q) {
      Vector v = rng.normal_vector(2);
      double fast = gauge_of_hull(rho, ambient, gens, v);
      double oracle = angular_gauge_oracle(rho, ambient, gens, v);
      double rel = std::abs(fast - oracle) / std::max(oracle, 1e-12);
      worst_rel = std::max(worst_rel, rel);
      ++gauge_queries;
      if (rel > 1e-3) {
        c.check(false, "gauge instance " + std::to_string(instance) +
                           " query " + std::to_string(q) + " rel err " +
                           fmt(rel));
      }
    }
  }
  c.note(std::to_string(gauge_queries) + " gauge queries, worst rel err " +
         fmt(worst_rel));

  // Random LPs against exhaustive vertex enumeration.
  double worst_abs = 0.0;
  for (int k = 0; k < 1000; ++k) {
    Rng rng(kSuiteSeed + 31 * k + 7);
    const int n_vars = 2 + int(rng.uniform_int(2));
    const int n_rows = 2 + int(rng.uniform_int(5));
    LinearProgram lp;
    lp.objective = rng.normal_vector(n_vars);
    // Random half-spaces through positive offsets keep the origin feasible;
    // the box keeps the polytope bounded so enumeration is complete.
    lp.ineq_lhs = Matrix(n_rows + 2 * n_vars, n_vars);
    lp.ineq_rhs = Vector(n_rows + 2 * n_vars);
    for (int r = 0; r < n_rows; ++r) {
      lp.ineq_lhs.row(r) = rng.normal_vector(n_vars).transpose();
      lp.ineq_rhs[r] = rng.uniform(0.2, 2.0);
    }
    for (int i = 0; i < n_vars; ++i) {
      lp.ineq_lhs.row(n_rows + 2 * i).setZero();
      lp.ineq_lhs(n_rows + 2 * i, i) = 1.0;
      lp.ineq_rhs[n_rows + 2 * i] = 10.0;
      lp.ineq_lhs.row(n_rows + 2 * i + 1).setZero();
      lp.ineq_lhs(n_rows + 2 * i + 1, i) = -1.0;
      lp.ineq_rhs[n_rows + 2 * i + 1] = 10.0;
    }
    if (k % 5 == 0) {
      // A random hyperplane through the origin exercises the equality path.
      lp.eq_lhs = rng.normal_vector(n_vars).transpose();
      lp.eq_rhs = Vector::Zero(1);
    }
    LpResult got = solve_lp(lp);
    VertexEnumResult want = brute_force_lp(lp);
    c.check(got.status == LpStatus::Optimal,
            "lp " + std::to_string(k) + " solver status not optimal");
    c.check(want.feasible, "lp " + std::to_string(k) + " oracle infeasible");
    if (got.status == LpStatus::Optimal && want.feasible) {
      double err = std::abs(got.value - want.value);
      worst_abs = std::max(worst_abs, err);
      if (err > 1e-9)
        c.check(false,
                "lp " + std::to_string(k) + " value differs by " + fmt(err));
    }
  }
  c.note("1000 LPs, worst value gap " + fmt(worst_abs));
  return {"oracle-equivalence", c.pass, 0.0, c.details};
}

// ---------------------------------------------------------------- criterion 6

CriterionResult criterion_axioms() {
  Checker c;
  struct Instance {
    std::string id;
    NormPtr spec;
  };
  std::vector<Instance> instances;
  instances.push_back({"lp p=1", make_lp_norm(4, 1.0)});
  instances.push_back({"lp p=2", make_lp_norm(4, 2.0)});
  instances.push_back({"lp p=3.5", make_lp_norm(4, 3.5)});
  instances.push_back({"lp p=inf", make_lp_norm(4, kInf)});
  {
    Rng rng(kSuiteSeed + 4242);
    Matrix facets(6, 3);
    for (int r = 0; r < 6; ++r)
      facets.row(r) = (rng.normal_vector(3) * rng.uniform(0.6, 1.4))
                          .transpose();
    instances.push_back({"polyhedral", make_polyhedral_norm(facets)});
  }
  instances.push_back({"scaled", make_scaled_norm(0.7, make_lp_norm(3, 2.0))});
  instances.push_back({"max_of", mixed_norm(4)});
  {
    Matrix facets(4, 2);
    facets << 1, 0, -1, 0, 0, 1, 0, -1;  // the sup ball in the plane
    std::vector<Vector> gens(2);
    gens[0] = Vector(2);
    gens[0] << 1.3, 0.4;
    gens[1] = Vector(2);
    gens[1] << -0.2, 1.1;
    instances.push_back(
        {"hull_gauge linear",
         make_hull_gauge(make_polyhedral_norm(facets), gens, 0.8)});
  }
  {
    std::vector<Vector> gens(2);
    gens[0] = Vector(3);
    gens[0] << 1.2, 0.3, -0.5;
    gens[1] = Vector(3);
    gens[1] << 0.2, 1.0, 0.8;
    instances.push_back(
        {"hull_gauge euclidean",
         make_hull_gauge(make_lp_norm(3, 2.0), gens, 0.9)});
  }
  {
    Matrix basis(3, 2);
    basis << 1, 0, 0, 1, 0, 0;
    instances.push_back(
        {"subspace_extension",
         extend_norm(make_lp_norm(3, 2.0), basis, make_lp_norm(2, 2.0), 1.0)});
  }
  instances.push_back(
      {"spreading_composite",
       make_spreading_composite(make_lp_norm(8, 2.0), 0.1, 2,
                                make_lp_norm(8, 2.0))});

  for (const Instance& inst : instances) {
    const int dim = inst.spec->dim();
    Rng rng(kSuiteSeed + std::hash<std::string>{}(inst.id));
    double min_slack = kInf;
    for (int k = 0; k < 10000; ++k) {
      Vector x = rng.normal_vector(dim);
      Vector y = rng.normal_vector(dim);
      double t = rng.uniform(-3.0, 3.0);
      double nx = norm_eval(inst.spec, x);
      double ny = norm_eval(inst.spec, y);
      min_slack = std::min(min_slack, -std::abs(norm_eval(inst.spec, -x) - nx));
      min_slack = std::min(
          min_slack,
          -std::abs(norm_eval(inst.spec, t * x) - std::abs(t) * nx));
      min_slack = std::min(min_slack, nx + ny - norm_eval(inst.spec, x + y));
    }
    c.check(min_slack >= -1e-9,
            inst.id + " min axiom slack " + fmt(min_slack));
    c.note(inst.id + " min_slack=" + fmt(min_slack));
  }
  return {"norm-axioms", c.pass, 0.0, c.details};
}

// ---------------------------------------------------------------- criterion 7

CriterionResult criterion_spreading() {
  Checker c;
  const int dim = 8;
  const NormPtr base = make_lp_norm(dim, 2.0);
  const NormPtr spec = make_spreading_composite(base, 0.1, 2, base);
  double first = 0.0;
  double max_pair_spread = 0.0;
  double max_sign_gap = 0.0;
  bool have_first = false;
  for (int n = 0; n < dim; ++n) {
    for (int m = n + 1; m < dim; ++m) {
      Vector diff = Vector::Zero(dim);
      diff[n] = 1.0;
      diff[m] = -1.0;
      double v = norm_eval(spec, diff);
      Vector sum = diff;
      sum[m] = 1.0;
      max_sign_gap =
          std::max(max_sign_gap, std::abs(v - norm_eval(spec, sum)));
      if (!have_first) {
        first = v;
        have_first = true;
      }
      max_pair_spread = std::max(max_pair_spread, std::abs(v - first));
    }
  }
  c.check(max_pair_spread <= 1e-12,
          "pair values spread " + fmt(max_pair_spread));
  c.check(max_sign_gap <= 1e-12,
          "|e_n - e_m| vs |e_n + e_m| gap " + fmt(max_sign_gap));
  c.note("value=" + fmt(first) + " spread=" + fmt(max_pair_spread));

  Rng rng(kSuiteSeed + 7);
  double min_slack = kInf;
  for (int k = 0; k < 1000; ++k) {
    Vector x = rng.normal_vector(dim);
    min_slack = std::min(
        min_slack, norm_eval(spec, x) - norm_eval(base, x) / (1.0 + 0.1));
  }
  c.check(min_slack >= -1e-9, "sandwich slack " + fmt(min_slack));
  c.note("min sandwich slack=" + fmt(min_slack));
  return {"spreading-norm", c.pass, 0.0, c.details};
}

// ---------------------------------------------------------------- criterion 8

CriterionResult criterion_corollary() {
  Checker c;
  for (int n = 2; n <= 6; ++n) {
    std::string id = "n=" + std::to_string(n);
    const NormPtr spec = make_lp_norm(n, 2.0);
    BiorthogonalSystem sys;
    sys.space = spec;
    for (int i = 0; i < n; ++i) {
      Vector e = Vector::Zero(n);
      e[i] = 1.0;
      sys.vectors.push_back(e);
      sys.functionals.push_back(DualFunctional{e, 1.0});
    }
    sys.bound_m = 1.0;
    RenormOptions options;
    options.seed = kSuiteSeed;
    RenormResult via_system = corollary_renorm(sys, spec, options);
    c.check(std::abs(via_system.distortion_bound - 2.0) <= 1e-12,
            id + " distortion bound " + fmt(via_system.distortion_bound));
    RenormCase via_cert = renorm_basis(n, 2.0);
    double worst_gap = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vector d = sys.vectors[i] - sys.vectors[j];
        worst_gap = std::max(worst_gap,
                             std::abs(norm_eval(via_system.new_norm, d) -
                                      norm_eval(via_cert.result.new_norm, d)));
      }
    c.check(worst_gap <= 1e-6, id + " distance gap vs direct pipeline " +
                                   fmt(worst_gap));
    c.note(id + " gap=" + fmt(worst_gap) + " rho=" + fmt(via_system.rho));
  }

  // Rescaling round-trip on a representative certificate.
  const NormPtr spec = make_lp_norm(4, 2.0);
  PointSet basis = standard_basis_set(4);
  AntipodalCertificate cert = petty_certificate(spec, basis, 1e-9);
  const double lambda = 3.7;
  for (RescaleMode mode : {RescaleMode::scale_functionals,
                           RescaleMode::scale_points}) {
    AntipodalCertificate rt = rescale_certificate(
        rescale_certificate(cert, lambda, mode), 1.0 / lambda, mode);
    double gap = std::max({std::abs(rt.c1 - cert.c1),
                           std::abs(rt.c2 - cert.c2),
                           std::abs(rt.d - cert.d)});
    for (std::size_t k = 0; k < cert.pairs.size(); ++k)
      gap = std::max(gap,
                     std::abs(rt.pairs[k].margin - cert.pairs[k].margin));
    std::string id = mode == RescaleMode::scale_functionals
                         ? "rescale functionals"
                         : "rescale points";
    c.check(gap <= 1e-12, id + " round-trip gap " + fmt(gap));
    c.note(id + " gap=" + fmt(gap));
  }
  return {"corollary-pipeline", c.pass, 0.0, c.details};
}

using CriterionFn = CriterionResult (*)();

const std::vector<std::pair<std::string, CriterionFn>>& registry() {
  static const std::vector<std::pair<std::string, CriterionFn>> table = {
      {"fixedpoint-c0", criterion_fixedpoint},
      {"renorm-theorem3", criterion_renorm},
      {"petty-closure", criterion_petty},
      {"danzer-grunbaum", criterion_danzer},
      {"oracle-equivalence", criterion_oracles},
      {"norm-axioms", criterion_axioms},
      {"spreading-norm", criterion_spreading},
      {"corollary-pipeline", criterion_corollary},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

CriterionResult run_criterion(const std::string& name) {
  for (const auto& entry : registry()) {
    if (entry.first != name) continue;
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = entry.second();
    } catch (const std::exception& e) {
      result = {name, false, 0.0, std::string("FAIL: exception: ") + e.what()};
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return result;
  }
  std::string valid;
  for (const auto& entry : registry()) {
    if (!valid.empty()) valid += ", ";
    valid += entry.first;
  }
  throw invalid_input_error("unknown criterion '" + name +
                            "'; valid names: " + valid);
}

std::vector<CriterionResult> run_suite(const std::vector<std::string>& names,
                                       bool parallel) {
  std::vector<std::string> selected = names;
  if (selected.empty()) selected = criterion_names();
  for (const std::string& name : selected) {
    bool known = false;
    for (const auto& entry : registry()) known = known || entry.first == name;
    if (!known) run_criterion(name);  // throws with the valid-name list
  }
  return parallel_map(
      int(selected.size()),
      [&](int i) { return run_criterion(selected[i]); }, parallel);
}

}  // namespace equinorm
