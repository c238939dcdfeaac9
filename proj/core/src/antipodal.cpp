#include "equinorm/antipodal.hpp"

#include "equinorm/linprog.hpp"
#include "equinorm/nnls.hpp"
#include "equinorm/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace equinorm {

namespace {

// Rows a_k with the chain constraints written as a_k . f >= 0:
// (x_k - x_i) . f >= 0 and (x_j - x_k) . f >= 0 for every k.  Zero rows
// (k = i resp. k = j) are dropped.
Matrix chain_rows(const PointSet& s, int i, int j) {
  const int n = s.size();
  const auto dim = s.points.front().size();
  Matrix a(2 * n - 2, dim);
  int r = 0;
  for (int k = 0; k < n; ++k) {
    if (k != i)
      a.row(r++) = (s.points[static_cast<std::size_t>(k)] -
                    s.points[static_cast<std::size_t>(i)])
                       .transpose();
    if (k != j)
      a.row(r++) = (s.points[static_cast<std::size_t>(j)] -
                    s.points[static_cast<std::size_t>(k)])
                       .transpose();
  }
  return a.topRows(r);
}

struct PairSolve {
  Vector f;
  double delta = 0.0;
};

// max u . f  over the chain cone intersected with the Euclidean ball of
// radius c2.  By Moreau, the optimum is c2 ||P_C(u)|| with P_C the projection
// onto the cone C = {f : A f >= 0}; P_C(u) = u - P_{C°}(u) and the polar
// C° is generated by the negated constraint rows, so P_{C°} is an exact
// nonnegative least-squares projection.
PairSolve solve_pair_l2(const Matrix& a, const Vector& u, double c2) {
  Matrix generators = -a.transpose();  // columns span C°
  Vector p_polar = project_onto_cone(generators, u);
  Vector p_cone = u - p_polar;
  double norm = p_cone.norm();
  PairSolve out;
  if (norm <= 1e-14 * std::max(1.0, u.norm())) {
    out.f = Vector::Zero(u.size());
    out.delta = 0.0;
    return out;
  }
  out.f = (c2 / norm) * p_cone;
  out.delta = out.f.dot(u);
  return out;
}

// Shared LP core: maximize u . f with f = recover * vars (an affine read of
// the LP variables), given the dual-ball and chain constraints already
// encoded in lp.
PairSolve solve_pair_lp(const LinearProgram& lp, const Matrix& recover,
                        const Vector& u) {
  LpResult res = solve_lp(lp);
  if (res.status == LpStatus::Unbounded) {
    throw numerical_error("certify_antipodal: pair LP unbounded");
  }
  PairSolve out;
  if (res.status == LpStatus::Infeasible) {
    // f = 0 is always feasible; reaching here means the solver failed.
    throw numerical_error("certify_antipodal: pair LP reported infeasible");
  }
  out.f = recover * res.solution;
  out.delta = out.f.dot(u);
  return out;
}

// lp(inf) spec: dual ball is the l1 ball.  Variables [f; t] with t_i >= |f_i|
// and sum t <= c2.
PairSolve solve_pair_linf(const Matrix& a, const Vector& u, double c2) {
  const int d = static_cast<int>(u.size());
  const int rows = static_cast<int>(a.rows());
  LinearProgram lp;
  lp.objective = Vector::Zero(2 * d);
  lp.objective.head(d) = -u;
  lp.ineq_lhs = Matrix::Zero(2 * d + 1 + rows, 2 * d);
  lp.ineq_rhs = Vector::Zero(2 * d + 1 + rows);
  for (int k = 0; k < d; ++k) {
    lp.ineq_lhs(2 * k, k) = 1.0;       //  f_k - t_k <= 0
    lp.ineq_lhs(2 * k, d + k) = -1.0;
    lp.ineq_lhs(2 * k + 1, k) = -1.0;  // -f_k - t_k <= 0
    lp.ineq_lhs(2 * k + 1, d + k) = -1.0;
  }
  lp.ineq_lhs.row(2 * d).tail(d).setOnes();  // sum t <= c2
  lp.ineq_rhs(2 * d) = c2;
  lp.ineq_lhs.bottomRows(rows).leftCols(d) = -a;  // chain: a f >= 0
  Matrix recover = Matrix::Zero(d, 2 * d);
  recover.leftCols(d).setIdentity();
  return solve_pair_lp(lp, recover, u);
}

// lp(1) spec: dual ball is the sup-norm box |f_k| <= c2.
PairSolve solve_pair_l1(const Matrix& a, const Vector& u, double c2) {
  const int d = static_cast<int>(u.size());
  const int rows = static_cast<int>(a.rows());
  LinearProgram lp;
  lp.objective = -u;
  lp.ineq_lhs = Matrix::Zero(2 * d + rows, d);
  lp.ineq_rhs = Vector::Zero(2 * d + rows);
  lp.ineq_lhs.topRows(d).setIdentity();
  lp.ineq_rhs.head(d).setConstant(c2);
  lp.ineq_lhs.middleRows(d, d) = -Matrix::Identity(d, d);
  lp.ineq_rhs.segment(d, d).setConstant(c2);
  lp.ineq_lhs.bottomRows(rows) = -a;
  Matrix recover = Matrix::Identity(d, d);
  return solve_pair_lp(lp, recover, u);
}

// polyhedral spec with facet matrix g: the dual ball is the convex hull of
// +-rows, so f = g^T c with ||c||_1 <= c2.  Variables [c; t], t_r >= |c_r|.
PairSolve solve_pair_polyhedral(const Matrix& g, const Matrix& a,
                                const Vector& u, double c2) {
  const int m = static_cast<int>(g.rows());
  const int rows = static_cast<int>(a.rows());
  LinearProgram lp;
  lp.objective = Vector::Zero(2 * m);
  lp.objective.head(m) = -(g * u);
  lp.ineq_lhs = Matrix::Zero(2 * m + 1 + rows, 2 * m);
  lp.ineq_rhs = Vector::Zero(2 * m + 1 + rows);
  for (int r = 0; r < m; ++r) {
    lp.ineq_lhs(2 * r, r) = 1.0;
    lp.ineq_lhs(2 * r, m + r) = -1.0;
    lp.ineq_lhs(2 * r + 1, r) = -1.0;
    lp.ineq_lhs(2 * r + 1, m + r) = -1.0;
  }
  lp.ineq_lhs.row(2 * m).tail(m).setOnes();
  lp.ineq_rhs(2 * m) = c2;
  lp.ineq_lhs.bottomRows(rows).leftCols(m) = -(a * g.transpose());
  Matrix recover = Matrix::Zero(static_cast<int>(u.size()), 2 * m);
  recover.leftCols(m) = g.transpose();
  return solve_pair_lp(lp, recover, u);
}

PairSolve solve_pair(const NormPtr& spec, const Matrix& a, const Vector& u,
                     double c2) {
  if (spec->kind() == "scaled") {
    const auto* sc = static_cast<const ScaledNorm*>(spec.get());
    // ||f||* under alpha ||.||_base is ||f||*_base / alpha.
    return solve_pair(sc->base(), a, u, c2 * sc->alpha());
  }
  if (spec->kind() == "lp") {
    const auto* lp = static_cast<const LpNorm*>(spec.get());
    if (lp->is_inf()) return solve_pair_linf(a, u, c2);
    if (lp->p() == 2.0) return solve_pair_l2(a, u, c2);
    if (lp->p() == 1.0) return solve_pair_l1(a, u, c2);
    throw invalid_input_error(
        "certify_antipodal: unsupported norm variant for dual constraint: "
        "lp(" + std::to_string(lp->p()) + "); supported exponents are 1, 2, inf");
  }
  if (spec->kind() == "polyhedral") {
    const auto* poly = static_cast<const PolyhedralNorm*>(spec.get());
    return solve_pair_polyhedral(poly->facets(), a, u, c2);
  }
  throw invalid_input_error(
      "certify_antipodal: unsupported norm variant for dual constraint: " +
      spec->kind());
}

}  // namespace

CertifyResult certify_antipodal(const NormPtr& spec, const PointSet& s,
                                double c2, const CertifyOptions& options) {
  validate_point_set(s);
  require(s.size() >= 2, "need at least two points");
  require(spec && spec->dim() == s.dim(), "norm dimension mismatch");
  require(std::isfinite(c2) && c2 > 0.0, "c2 must be positive");

  const int n = s.size();
  std::vector<std::pair<int, int>> ordered;
  ordered.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) ordered.emplace_back(i, j);

  std::vector<PairSolve> solves = parallel_map(
      static_cast<int>(ordered.size()),
      [&](int idx) {
        auto [i, j] = ordered[static_cast<std::size_t>(idx)];
        Matrix a = chain_rows(s, i, j);
        Vector u = s.points[static_cast<std::size_t>(j)] -
                   s.points[static_cast<std::size_t>(i)];
        return solve_pair(spec, a, u, c2);
      },
      options.parallel);

  CertifyResult result;
  for (std::size_t idx = 0; idx < ordered.size(); ++idx) {
    if (solves[idx].delta <= options.tol) {
      CertifyFailure fail;
      fail.i = ordered[idx].first;
      fail.j = ordered[idx].second;
      fail.delta = solves[idx].delta;
      fail.reason =
          "no functional within the dual bound separates the pair: best "
          "achievable separation " +
          std::to_string(solves[idx].delta);
      result.failure = fail;
      return result;
    }
  }

  AntipodalCertificate cert;
  cert.c2 = c2;
  cert.c1 = 0.0;
  for (const Vector& p : s.points)
    cert.c1 = std::max(cert.c1, norm_eval(spec, p));
  cert.d = std::numeric_limits<double>::infinity();
  cert.pairs.reserve(ordered.size());
  for (std::size_t idx = 0; idx < ordered.size(); ++idx) {
    auto [i, j] = ordered[idx];
    PairCertificate pc;
    pc.i = i;
    pc.j = j;
    pc.f.coeffs = solves[idx].f;
    pc.f.dual_bound = c2;
    double fi = pc.f(s.points[static_cast<std::size_t>(i)]);
    double fj = pc.f(s.points[static_cast<std::size_t>(j)]);
    pc.margin = fj - fi;
    pc.slack_lo = std::numeric_limits<double>::infinity();
    pc.slack_hi = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      double fk = pc.f(s.points[static_cast<std::size_t>(k)]);
      pc.slack_lo = std::min(pc.slack_lo, fk - fi);
      pc.slack_hi = std::min(pc.slack_hi, fj - fk);
    }
    cert.d = std::min(cert.d, pc.margin);
    cert.pairs.push_back(std::move(pc));
  }
  result.certificate = std::move(cert);
  return result;
}

double separation_margin(const NormPtr& spec, const PointSet& s,
                         const CertifyOptions& options) {
  validate_point_set(s);
  require(spec && spec->dim() == s.dim(), "norm dimension mismatch");
  for (int i = 0; i < s.size(); ++i) {
    double norm = norm_eval(spec, s.points[static_cast<std::size_t>(i)]);
    require(norm <= 1.0 + options.tol,
            "separation_margin: point " + std::to_string(i) +
                " lies outside the unit ball (norm " + std::to_string(norm) +
                ")");
  }
  CertifyResult result = certify_antipodal(spec, s, 1.0, options);
  return result.ok() ? result.certificate->d : 0.0;
}

}  // namespace equinorm
