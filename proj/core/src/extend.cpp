#include "equinorm/convexmin.hpp"
#include "equinorm/linprog.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/rng.hpp"

namespace equinorm {
namespace {

// Extreme points of the dual ball of a coefficient norm, one per +- pair.
// Exact for polytopal duals; otherwise boundary points sampled through
// norming functionals of deterministic sphere directions (each such point is
// the dual-ball maximizer in its direction).
Matrix dual_ball_extremes(const NormPtr& coeff, int n_dual_dirs,
                          std::uint64_t seed) {
  const int k = coeff->dim();
  if (const auto* poly = dynamic_cast<const PolyhedralNorm*>(coeff.get()))
    return poly->facets();
  if (const auto* lp = dynamic_cast<const LpNorm*>(coeff.get())) {
    if (lp->is_inf()) return Matrix::Identity(k, k);  // dual l1 ball
    if (lp->p() == 1.0 && k <= 12) {                  // dual linf ball
      const int rows = 1 << (k - 1);
      Matrix e(rows, k);
      for (int r = 0; r < rows; ++r) {
        e(r, 0) = 1.0;
        for (int i = 1; i < k; ++i) e(r, i) = (r >> (i - 1)) & 1 ? -1.0 : 1.0;
      }
      return e;
    }
  }
  if (const auto* sc = dynamic_cast<const ScaledNorm*>(coeff.get())) {
    // dual(f) = dual_base(f)/alpha <= 1 is dual_base(f) <= alpha.
    return sc->alpha() * dual_ball_extremes(sc->base(), n_dual_dirs, seed);
  }
  Rng rng(seed);
  Matrix e(n_dual_dirs, k);
  for (int i = 0; i < n_dual_dirs; ++i) {
    const Vector u = rng.sphere_direction(k);
    e.row(i) = coeff->norming(u).coeffs.transpose();
  }
  return e;
}

// Minimal-ambient-dual-norm extension of the coefficient functional phi:
// find f with Z^T f = phi minimizing dual_ambient(f) (Hahn-Banach witness).
Vector minimal_extension(const NormPtr& ambient, const Matrix& z,
                         const Vector& phi) {
  const int n = static_cast<int>(z.rows());
  const int k = static_cast<int>(z.cols());
  if (const auto* lp = dynamic_cast<const LpNorm*>(ambient.get())) {
    if (lp->p() == 2.0) return z * (z.transpose() * z).ldlt().solve(phi);
    if (lp->is_inf()) {
      // min ||f||_1 subject to Z^T f = phi.
      LinearProgram prog;
      prog.objective = Vector::Zero(2 * n);
      prog.objective.tail(n).setOnes();
      prog.eq_lhs = Matrix::Zero(k, 2 * n);
      prog.eq_lhs.leftCols(n) = z.transpose();
      prog.eq_rhs = phi;
      prog.ineq_lhs = Matrix::Zero(2 * n, 2 * n);
      prog.ineq_rhs = Vector::Zero(2 * n);
      for (int i = 0; i < n; ++i) {
        prog.ineq_lhs(2 * i, i) = 1.0;
        prog.ineq_lhs(2 * i, n + i) = -1.0;
        prog.ineq_lhs(2 * i + 1, i) = -1.0;
        prog.ineq_lhs(2 * i + 1, n + i) = -1.0;
      }
      const LpResult r = solve_lp(prog);
      if (r.status != LpStatus::Optimal)
        throw numerical_error("extend_norm: l1-extension LP failed");
      return r.solution.head(n);
    }
    if (lp->p() == 1.0) {
      // min ||f||_inf subject to Z^T f = phi.
      LinearProgram prog;
      prog.objective = Vector::Zero(n + 1);
      prog.objective(n) = 1.0;
      prog.eq_lhs = Matrix::Zero(k, n + 1);
      prog.eq_lhs.leftCols(n) = z.transpose();
      prog.eq_rhs = phi;
      prog.ineq_lhs = Matrix::Zero(2 * n, n + 1);
      prog.ineq_rhs = Vector::Zero(2 * n);
      for (int i = 0; i < n; ++i) {
        prog.ineq_lhs(2 * i, i) = 1.0;
        prog.ineq_lhs(2 * i, n) = -1.0;
        prog.ineq_lhs(2 * i + 1, i) = -1.0;
        prog.ineq_lhs(2 * i + 1, n) = -1.0;
      }
      const LpResult r = solve_lp(prog);
      if (r.status != LpStatus::Optimal)
        throw numerical_error("extend_norm: linf-extension LP failed");
      return r.solution.head(n);
    }
  }
  if (const auto* poly = dynamic_cast<const PolyhedralNorm*>(ambient.get())) {
    // dual_amb(f) = min sum|beta| with f = G^T beta; minimize over the fiber
    // (Z^T G^T) beta = phi.
    const Matrix& g = poly->facets();
    const int m = static_cast<int>(g.rows());
    LinearProgram prog;
    prog.objective = Vector::Zero(2 * m);
    prog.objective.tail(m).setOnes();
    prog.eq_lhs = Matrix::Zero(k, 2 * m);
    prog.eq_lhs.leftCols(m) = z.transpose() * g.transpose();
    prog.eq_rhs = phi;
    prog.ineq_lhs = Matrix::Zero(2 * m, 2 * m);
    prog.ineq_rhs = Vector::Zero(2 * m);
    for (int i = 0; i < m; ++i) {
      prog.ineq_lhs(2 * i, i) = 1.0;
      prog.ineq_lhs(2 * i, m + i) = -1.0;
      prog.ineq_lhs(2 * i + 1, i) = -1.0;
      prog.ineq_lhs(2 * i + 1, m + i) = -1.0;
    }
    const LpResult r = solve_lp(prog);
    if (r.status != LpStatus::Optimal)
      throw numerical_error("extend_norm: polyhedral-extension LP failed");
    return g.transpose() * r.solution.head(m);
  }
  if (const auto* sc = dynamic_cast<const ScaledNorm*>(ambient.get())) {
    // dual of alpha*base is dual_base/alpha: same minimizer as for base.
    return minimal_extension(sc->base(), z, phi);
  }
  // Generic ambient: descend dual_ambient over the affine fiber f0 + ker(Z^T).
  const Vector f0 = z * (z.transpose() * z).ldlt().solve(phi);
  Eigen::FullPivLU<Matrix> lu(z.transpose());
  const Matrix kernel = lu.kernel();
  if (kernel.cols() == 0 || kernel.lpNorm<Eigen::Infinity>() == 0.0) return f0;
  auto objective = [&](const Vector& y) {
    return ambient->dual_eval(f0 + kernel * y);
  };
  ConvexMinOptions opt;
  opt.max_iter = 2000;
  const ConvexMinResult r =
      minimize_convex(objective, nullptr, Vector::Zero(kernel.cols()), opt);
  return f0 + kernel * r.x;
}

Matrix ambient_dual_generators(const Norm* ambient) {
  if (const auto* poly = dynamic_cast<const PolyhedralNorm*>(ambient))
    return poly->facets();
  if (const auto* lp = dynamic_cast<const LpNorm*>(ambient)) {
    const int n = lp->dim();
    if (lp->is_inf()) {
      // dual ball of linf is the l1 ball = conv{+-e_i}.
      return Matrix::Identity(n, n);
    }
    if (lp->p() == 1.0 && n <= 12) {
      const int rows = 1 << (n - 1);
      Matrix e(rows, n);
      for (int r = 0; r < rows; ++r) {
        e(r, 0) = 1.0;
        for (int i = 1; i < n; ++i) e(r, i) = (r >> (i - 1)) & 1 ? -1.0 : 1.0;
      }
      return e;
    }
  }
  return Matrix();
}

}  // namespace

// ---------------------------------------------------------------------------
// SubspaceExtensionNorm

SubspaceExtensionNorm::SubspaceExtensionNorm(NormPtr ambient, Matrix basis,
                                             NormPtr coeff_norm, double c2,
                                             Matrix extended_functionals,
                                             Vector extension_norms)
    : ambient_(std::move(ambient)),
      basis_(std::move(basis)),
      coeff_norm_(std::move(coeff_norm)),
      c2_(c2),
      ext_(std::move(extended_functionals)),
      extension_norms_(std::move(extension_norms)) {
  require(ambient_ != nullptr && coeff_norm_ != nullptr,
          "subspace_extension: null norm");
  require(basis_.rows() == ambient_->dim(),
          "subspace_extension: basis dimension mismatch");
  require(basis_.cols() == coeff_norm_->dim(),
          "subspace_extension: coefficient norm dimension mismatch");
  require(is_finite(c2_) && c2_ > 0.0, "subspace_extension: c2 must be > 0");
  require(ext_.cols() == ambient_->dim(),
          "subspace_extension: functional dimension mismatch");
  require(ext_.rows() >= 1, "subspace_extension: no extended functionals");
}

double SubspaceExtensionNorm::eval(const Vector& v) const {
  const double functional_branch = (ext_ * v).cwiseAbs().maxCoeff();
  return std::max(functional_branch, ambient_->eval(v) / c2_);
}

double SubspaceExtensionNorm::dual_eval(const Vector& f) const {
  // Inf-convolution of the branch duals: f = Ext^T c + h costs
  // sum|c| + c2 * dual_amb(h).  The all-ambient split is always feasible.
  double best = c2_ * ambient_->dual_eval(f);
  const int j = static_cast<int>(ext_.rows());
  const Matrix amb_gens = ambient_dual_generators(ambient_.get());
  const int m = static_cast<int>(amb_gens.rows());
  if (m > 0 && j + m <= 200) {
    // Exact split LP: f = Ext^T c + G^T beta, cost sum|c| + c2 sum|beta|.
    const int nv = 2 * (j + m);
    LinearProgram prog;
    prog.objective = Vector::Zero(nv);
    prog.objective.segment(j + m, j).setOnes();
    prog.objective.tail(m).setConstant(c2_);
    prog.eq_lhs = Matrix::Zero(dim(), nv);
    prog.eq_lhs.leftCols(j) = ext_.transpose();
    prog.eq_lhs.middleCols(j, m) = amb_gens.transpose();
    prog.eq_rhs = f;
    prog.ineq_lhs = Matrix::Zero(nv, nv);
    prog.ineq_rhs = Vector::Zero(nv);
    for (int i = 0; i < j + m; ++i) {
      prog.ineq_lhs(2 * i, i) = 1.0;
      prog.ineq_lhs(2 * i, j + m + i) = -1.0;
      prog.ineq_lhs(2 * i + 1, i) = -1.0;
      prog.ineq_lhs(2 * i + 1, j + m + i) = -1.0;
    }
    const LpResult r = solve_lp(prog);
    if (r.status == LpStatus::Optimal) best = std::min(best, r.value);
  } else if (j <= 64) {
    // Convex refinement over the functional-branch coefficients.
    auto objective = [&](const Vector& c) {
      return c.lpNorm<1>() +
             c2_ * ambient_->dual_eval(f - ext_.transpose() * c);
    };
    ConvexMinOptions opt;
    opt.max_iter = 800;
    try {
      const ConvexMinResult r =
          minimize_convex(objective, nullptr, Vector::Zero(j), opt);
      best = std::min(best, r.value);
    } catch (const numerical_error&) {
      // keep the ambient-only candidate
    }
  }
  return best;
}

DualFunctional SubspaceExtensionNorm::norming(const Vector& v) const {
  const Vector vals = ext_ * v;
  int arg = 0;
  double functional_branch = std::abs(vals(0));
  for (int i = 1; i < vals.size(); ++i) {
    if (std::abs(vals(i)) > functional_branch) {
      functional_branch = std::abs(vals(i));
      arg = i;
    }
  }
  const double ambient_branch = ambient_->eval(v) / c2_;
  DualFunctional out;
  if (ambient_branch > functional_branch) {
    out = ambient_->norming(v);
    out.coeffs /= c2_;
  } else {
    out.coeffs = sign_of(vals(arg)) * Vector(ext_.row(arg));
  }
  return out;
}

NormPtr extend_norm(NormPtr ambient, const Matrix& basis, NormPtr coeff_norm,
                    double c2, const ExtendOptions& options) {
  require(ambient != nullptr && coeff_norm != nullptr,
          "extend_norm: null norm");
  require(basis.rows() == ambient->dim() && basis.cols() >= 1,
          "extend_norm: basis shape mismatch");
  require(basis.cols() == coeff_norm->dim(),
          "extend_norm: coefficient norm must act on basis coefficients");
  require(is_finite(c2) && c2 > 0.0, "extend_norm: c2 must be positive");
  Eigen::ColPivHouseholderQR<Matrix> qr(basis);
  require(qr.rank() == basis.cols(), "extend_norm: basis is linearly dependent");

  const int k = static_cast<int>(basis.cols());
  // Precondition: ambient(Z t) <= c2 * coeff_norm(t) on the subspace,
  // validated on coordinate directions plus seeded samples.
  Rng rng(options.seed);
  std::vector<Vector> probes;
  for (int i = 0; i < k; ++i) {
    Vector e = Vector::Zero(k);
    e(i) = 1.0;
    probes.push_back(e);
  }
  for (int i = 0; i < options.n_dual_dirs; ++i)
    probes.push_back(rng.sphere_direction(k));
  for (const Vector& t : probes) {
    const double lhs = ambient->eval(basis * t);
    const double rhs = c2 * coeff_norm->eval(t);
    if (lhs > rhs * (1.0 + options.tol) + options.tol)
      throw invalid_input_error(
          "extend_norm: sandwich violated on the subspace (ambient(Zt) = " +
          std::to_string(lhs) + " > c2*|||t||| = " + std::to_string(rhs) + ")");
  }

  const Matrix extremes =
      dual_ball_extremes(coeff_norm, options.n_dual_dirs, options.seed);
  Matrix ext(extremes.rows(), ambient->dim());
  Vector achieved(extremes.rows());
  for (int r = 0; r < extremes.rows(); ++r) {
    const Vector f =
        minimal_extension(ambient, basis, Vector(extremes.row(r)));
    ext.row(r) = f.transpose();
    achieved(r) = ambient->dual_eval(f);
  }
  return std::make_shared<SubspaceExtensionNorm>(
      std::move(ambient), basis, std::move(coeff_norm), c2, std::move(ext),
      std::move(achieved));
}

}  // namespace equinorm
