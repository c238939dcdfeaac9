#include "equinorm/norm.hpp"

#include "equinorm/convexmin.hpp"
#include "equinorm/gauge_solver.hpp"
#include "equinorm/linprog.hpp"

#include <algorithm>
#include <limits>

namespace equinorm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int first_argmax_abs(const Vector& v) {
  int best = 0;
  double val = std::abs(v(0));
  for (int i = 1; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > val) {
      val = a;
      best = i;
    }
  }
  return best;
}

double lp_norm_value(const Vector& v, double p) {
  if (std::isinf(p)) return v.lpNorm<Eigen::Infinity>();
  if (p == 1.0) return v.lpNorm<1>();
  if (p == 2.0) return v.norm();
  const double m = v.lpNorm<Eigen::Infinity>();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (int i = 0; i < v.size(); ++i) s += std::pow(std::abs(v(i)) / m, p);
  return m * std::pow(s, 1.0 / p);
}

}  // namespace

Vector Norm::dual_argmax(const Vector&) const {
  throw invalid_input_error("dual_argmax: not supported for variant " +
                            kind());
}

// ---------------------------------------------------------------------------
// LpNorm

LpNorm::LpNorm(int dim, double p) : dim_(dim), p_(p) {
  require(dim >= 1, "lp norm: dimension must be positive");
  require(p >= 1.0, "lp norm: exponent must satisfy p >= 1");
  if (std::isinf(p))
    q_ = 1.0;
  else if (p == 1.0)
    q_ = kInf;
  else
    q_ = p / (p - 1.0);
}

double LpNorm::eval(const Vector& v) const { return lp_norm_value(v, p_); }

double LpNorm::dual_eval(const Vector& f) const { return lp_norm_value(f, q_); }

DualFunctional LpNorm::norming(const Vector& v) const {
  DualFunctional out;
  if (std::isinf(p_)) {
    const int i = first_argmax_abs(v);
    out.coeffs = Vector::Zero(dim_);
    out.coeffs(i) = sign_of(v(i));
    return out;
  }
  if (p_ == 1.0) {
    out.coeffs = Vector(dim_);
    for (int i = 0; i < dim_; ++i) out.coeffs(i) = sign_of(v(i));
    return out;
  }
  const double nv = lp_norm_value(v, p_);
  out.coeffs = Vector(dim_);
  for (int i = 0; i < dim_; ++i)
    out.coeffs(i) = sign_of(v(i)) * std::pow(std::abs(v(i)) / nv, p_ - 1.0);
  return out;
}

Vector LpNorm::dual_argmax(const Vector& f) const {
  // Maximizer of f . x over the lp ball = norming direction of f in lq.
  if (f.lpNorm<Eigen::Infinity>() == 0.0) {
    Vector x = Vector::Zero(dim_);
    x(0) = 1.0;  // any unit vector maximizes the zero functional
    return x;
  }
  if (std::isinf(p_)) {
    Vector x(dim_);
    for (int i = 0; i < dim_; ++i) x(i) = f(i) >= 0.0 ? 1.0 : -1.0;
    return x;
  }
  if (p_ == 1.0) {
    const int i = first_argmax_abs(f);
    Vector x = Vector::Zero(dim_);
    x(i) = sign_of(f(i));
    return x;
  }
  const double nq = lp_norm_value(f, q_);
  Vector x(dim_);
  for (int i = 0; i < dim_; ++i)
    x(i) = sign_of(f(i)) * std::pow(std::abs(f(i)) / nq, q_ - 1.0);
  return x;
}

// ---------------------------------------------------------------------------
// PolyhedralNorm

PolyhedralNorm::PolyhedralNorm(Matrix facets) : facets_(std::move(facets)) {
  require(facets_.rows() >= 1 && facets_.cols() >= 1,
          "polyhedral norm: empty facet matrix");
  require(facets_.allFinite(), "polyhedral norm: non-finite facet entry");
  for (int j = 0; j < facets_.rows(); ++j)
    require(facets_.row(j).lpNorm<Eigen::Infinity>() > 0.0,
            "polyhedral norm: zero facet row");
  Eigen::ColPivHouseholderQR<Matrix> qr(facets_);
  require(qr.rank() == facets_.cols(),
          "polyhedral norm: facets do not span the space (degenerate ball)");
}

double PolyhedralNorm::eval(const Vector& v) const {
  return (facets_ * v).cwiseAbs().maxCoeff();
}

Vector PolyhedralNorm::dual_argmax(const Vector& f) const {
  const int n = dim();
  const int m = static_cast<int>(facets_.rows());
  LinearProgram lp;
  lp.objective = -f;
  lp.ineq_lhs = Matrix(2 * m, n);
  lp.ineq_lhs.topRows(m) = facets_;
  lp.ineq_lhs.bottomRows(m) = -facets_;
  lp.ineq_rhs = Vector::Ones(2 * m);
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal)
    throw numerical_error("polyhedral dual: LP failed to reach an optimum");
  return r.solution;
}

double PolyhedralNorm::dual_eval(const Vector& f) const {
  return f.dot(dual_argmax(f));
}

DualFunctional PolyhedralNorm::norming(const Vector& v) const {
  const Vector vals = facets_ * v;
  const int j = first_argmax_abs(vals);
  DualFunctional out;
  out.coeffs = sign_of(vals(j)) * Vector(facets_.row(j));
  return out;
}

// ---------------------------------------------------------------------------
// ScaledNorm

ScaledNorm::ScaledNorm(double alpha, NormPtr base)
    : alpha_(alpha), base_(std::move(base)) {
  require(base_ != nullptr, "scaled norm: null base");
  require(is_finite(alpha_) && alpha_ > 0.0,
          "scaled norm: scale must be positive and finite");
}

DualFunctional ScaledNorm::norming(const Vector& v) const {
  DualFunctional f = base_->norming(v);
  f.coeffs *= alpha_;
  return f;
}

// ---------------------------------------------------------------------------
// MaxOfNorm

MaxOfNorm::MaxOfNorm(std::vector<NormPtr> branches)
    : branches_(std::move(branches)) {
  require(!branches_.empty(), "max_of norm: no branches");
  for (const auto& b : branches_) {
    require(b != nullptr, "max_of norm: null branch");
    require(b->dim() == branches_.front()->dim(),
            "max_of norm: branch dimensions differ");
  }
}

double MaxOfNorm::eval(const Vector& v) const {
  double m = 0.0;
  for (const auto& b : branches_) m = std::max(m, b->eval(v));
  return m;
}

int MaxOfNorm::active_branch(const Vector& v) const {
  double m = -1.0;
  int arg = 0;
  for (size_t i = 0; i < branches_.size(); ++i) {
    const double e = branches_[i]->eval(v);
    if (e > m) {
      m = e;
      arg = static_cast<int>(i);
    }
  }
  return arg;
}

double MaxOfNorm::dual_eval(const Vector& f) const {
  // Single-branch splits give certified upper bounds on the infimal
  // convolution; a short subgradient descent over the split refines them.
  double best = kInf;
  for (const auto& b : branches_) best = std::min(best, b->dual_eval(f));
  const int nb = static_cast<int>(branches_.size());
  const int n = dim();
  if (nb >= 2 && (nb - 1) * n <= 256) {
    auto objective = [&](const Vector& z) {
      Vector last = f;
      double s = 0.0;
      for (int i = 0; i + 1 < nb; ++i) {
        const Vector gi = z.segment(i * n, n);
        s += branches_[static_cast<size_t>(i)]->dual_eval(gi);
        last -= gi;
      }
      return s + branches_.back()->dual_eval(last);
    };
    bool exact_subgrad = true;
    for (const auto& b : branches_)
      if (!b->supports_dual_argmax()) exact_subgrad = false;
    SubgradientFn subgrad;
    if (exact_subgrad) {
      // d/dg_i [sum dual_b(g_b)] with g_last = f - sum g_i: the dual-norm
      // subgradient is the ball argmax, so each block is argmax_i - argmax_last.
      subgrad = [this, f, nb, n](const Vector& z) {
        Vector last = f;
        for (int i = 0; i + 1 < nb; ++i) last -= z.segment(i * n, n);
        const Vector g_last = branches_.back()->dual_argmax(last);
        Vector g((nb - 1) * n);
        for (int i = 0; i + 1 < nb; ++i)
          g.segment(i * n, n) =
              branches_[static_cast<size_t>(i)]->dual_argmax(
                  z.segment(i * n, n)) -
              g_last;
        return g;
      };
    }
    Vector z0((nb - 1) * n);
    for (int i = 0; i + 1 < nb; ++i) z0.segment(i * n, n) = f / nb;
    ConvexMinOptions opt;
    opt.max_iter = exact_subgrad ? 400 : 60;
    opt.polish = false;
    opt.initial_step = 0.25 * (1.0 + f.norm());
    try {
      best =
          std::min(best, minimize_convex(objective, subgrad, z0, opt).value);
    } catch (const numerical_error&) {
      // refinement diverged; the candidate bound stands
    }
  }
  return best;
}

DualFunctional MaxOfNorm::norming(const Vector& v) const {
  return branches_[static_cast<size_t>(active_branch(v))]->norming(v);
}

// ---------------------------------------------------------------------------
// HullGaugeNorm

HullGaugeNorm::HullGaugeNorm(NormPtr ambient, std::vector<Vector> generators,
                             double rho)
    : ambient_(std::move(ambient)), rho_(rho) {
  require(ambient_ != nullptr, "hull_gauge: null ambient norm");
  require(is_finite(rho_) && rho_ > 0.0, "hull_gauge: rho must be positive");
  // Fold scaled ambients into the radius: alpha*base(r) <= rho*g is
  // base(r) <= (rho/alpha)*g.
  while (const auto* s = dynamic_cast<const ScaledNorm*>(ambient_.get())) {
    rho_ /= s->alpha();
    ambient_ = s->base();
  }
  const int n = ambient_->dim();
  std::vector<Vector> kept;
  for (const auto& g : generators) {
    require(g.size() == n, "hull_gauge: generator dimension mismatch");
    require(is_finite(g), "hull_gauge: non-finite generator");
    if (g.lpNorm<Eigen::Infinity>() < 1e-14) continue;
    bool dup = false;
    for (const auto& h : kept) {
      if ((g - h).lpNorm<Eigen::Infinity>() < 1e-12 ||
          (g + h).lpNorm<Eigen::Infinity>() < 1e-12) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(g);
  }
  gens_ = Matrix(n, static_cast<int>(kept.size()));
  for (size_t j = 0; j < kept.size(); ++j)
    gens_.col(static_cast<int>(j)) = kept[j];

  path_ = EvalPath::Generic;
  if (const auto* lp = dynamic_cast<const LpNorm*>(ambient_.get())) {
    if (lp->p() == 2.0) {
      path_ = EvalPath::Euclidean;
    } else if (lp->is_inf()) {
      path_ = EvalPath::Linear;
      ambient_facets_ = Matrix::Identity(n, n);
    } else if (lp->p() == 1.0 && n <= 12) {
      // One facet per sign pattern (up to global sign).
      const int rows = 1 << (n - 1);
      ambient_facets_ = Matrix(rows, n);
      for (int r = 0; r < rows; ++r) {
        ambient_facets_(r, 0) = 1.0;
        for (int i = 1; i < n; ++i)
          ambient_facets_(r, i) = (r >> (i - 1)) & 1 ? -1.0 : 1.0;
      }
    }
    if (ambient_facets_.rows() > 0) path_ = EvalPath::Linear;
  } else if (const auto* poly =
                 dynamic_cast<const PolyhedralNorm*>(ambient_.get())) {
    path_ = EvalPath::Linear;
    ambient_facets_ = poly->facets();
  }
}

double HullGaugeNorm::eval(const Vector& v) const {
  if (gens_.cols() == 0) return ambient_->eval(v) / rho_;
  // Canonicalize sign and scale so that symmetry and homogeneity hold to
  // rounding even on iterative paths: evaluate on the normalized
  // representative and scale back.
  const double mag = v.lpNorm<Eigen::Infinity>();
  if (mag == 0.0) return 0.0;
  double s = 1.0;
  for (int i = 0; i < v.size(); ++i) {
    if (v(i) != 0.0) {
      s = v(i) > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  const Vector u = (s / mag) * v;
  switch (path_) {
    case EvalPath::Euclidean:
      return mag * gauge_l2_ambient(gens_, u, rho_).value;
    case EvalPath::Linear:
      return mag * eval_linear(u);
    case EvalPath::Generic:
      return mag * eval_generic(u);
  }
  return 0.0;
}

// gauge(v) = min gamma_a + sum|t| with ambient(v - W t) <= rho * gamma_a,
// linearized through the ambient facets.  Variables z = [t; u; gamma_a].
double HullGaugeNorm::eval_linear(const Vector& v) const {
  const int k = static_cast<int>(gens_.cols());
  const int m = static_cast<int>(ambient_facets_.rows());
  const int nv = 2 * k + 1;
  const Matrix gw = ambient_facets_ * gens_;  // m x k
  const Vector gv = ambient_facets_ * v;      // m

  LinearProgram lp;
  lp.objective = Vector::Zero(nv);
  lp.objective.segment(k, k).setOnes();
  lp.objective(2 * k) = 1.0;
  lp.ineq_lhs = Matrix::Zero(2 * m + 2 * k + 1, nv);
  lp.ineq_rhs = Vector::Zero(2 * m + 2 * k + 1);
  for (int j = 0; j < m; ++j) {
    lp.ineq_lhs.block(2 * j, 0, 1, k) = -gw.row(j);
    lp.ineq_lhs(2 * j, 2 * k) = -rho_;
    lp.ineq_rhs(2 * j) = -gv(j);
    lp.ineq_lhs.block(2 * j + 1, 0, 1, k) = gw.row(j);
    lp.ineq_lhs(2 * j + 1, 2 * k) = -rho_;
    lp.ineq_rhs(2 * j + 1) = gv(j);
  }
  for (int i = 0; i < k; ++i) {
    lp.ineq_lhs(2 * m + 2 * i, i) = 1.0;
    lp.ineq_lhs(2 * m + 2 * i, k + i) = -1.0;
    lp.ineq_lhs(2 * m + 2 * i + 1, i) = -1.0;
    lp.ineq_lhs(2 * m + 2 * i + 1, k + i) = -1.0;
  }
  lp.ineq_lhs(2 * m + 2 * k, 2 * k) = -1.0;

  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal)
    throw numerical_error("hull_gauge: gauge LP did not reach an optimum");
  return r.value;
}

double HullGaugeNorm::eval_generic(const Vector& v) const {
  const int k = static_cast<int>(gens_.cols());
  auto phi = [&](const Vector& t) {
    return ambient_->eval(v - gens_ * t) / rho_ + t.lpNorm<1>();
  };
  Vector best_t = Vector::Zero(k);
  double best = ambient_->eval(v) / rho_;
  const double vn = v.lpNorm<Eigen::Infinity>();
  for (int j = 0; j < k; ++j) {
    const double cn = gens_.col(j).lpNorm<Eigen::Infinity>();
    if (cn < 1e-15) continue;
    double lo = -2.0 * vn / cn, hi = 2.0 * vn / cn;
    for (int it = 0; it < 80; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      Vector t1 = Vector::Zero(k), t2 = Vector::Zero(k);
      t1(j) = m1;
      t2(j) = m2;
      if (phi(t1) <= phi(t2))
        hi = m2;
      else
        lo = m1;
    }
    Vector tc = Vector::Zero(k);
    tc(j) = 0.5 * (lo + hi);
    if (phi(tc) < best) {
      best = phi(tc);
      best_t = tc;
    }
  }
  ConvexMinOptions opt;
  opt.max_iter = 2000;
  opt.initial_step = 0.5 * (1.0 + best_t.lpNorm<1>());
  try {
    const ConvexMinResult r = minimize_convex(phi, nullptr, best_t, opt);
    if (r.value < best) best = r.value;
  } catch (const numerical_error&) {
    // keep candidate value; it is a valid upper bound
  }
  return best;
}

double HullGaugeNorm::dual_eval(const Vector& f) const {
  // Support function of the hull: max of the branch support functions.
  double s = rho_ * ambient_->dual_eval(f);
  for (int j = 0; j < gens_.cols(); ++j)
    s = std::max(s, std::abs(f.dot(gens_.col(j))));
  return s;
}

Vector HullGaugeNorm::dual_argmax(const Vector& f) const {
  Vector best = rho_ * ambient_->dual_argmax(f);
  double best_val = f.dot(best);
  for (int j = 0; j < gens_.cols(); ++j) {
    const double val = std::abs(f.dot(gens_.col(j)));
    if (val > best_val) {
      best_val = val;
      best = sign_of(f.dot(gens_.col(j))) * gens_.col(j);
    }
  }
  return best;
}

DualFunctional HullGaugeNorm::norming(const Vector& v) const {
  const double value = eval(v);
  if (gens_.cols() == 0) {
    DualFunctional f = ambient_->norming(v);
    f.coeffs /= rho_;
    return f;
  }
  switch (path_) {
    case EvalPath::Euclidean:
      return norming_euclidean(v, value);
    case EvalPath::Linear:
      return norming_linear(v, value);
    case EvalPath::Generic: {
      // KKT guess from the ambient norming functional at the residual.
      auto phi = [&](const Vector& t) {
        return ambient_->eval(v - gens_ * t) / rho_ + t.lpNorm<1>();
      };
      ConvexMinOptions opt;
      opt.max_iter = 2000;
      const ConvexMinResult r =
          minimize_convex(phi, nullptr, Vector::Zero(gens_.cols()), opt);
      const Vector residual = v - gens_ * r.x;
      if (residual.lpNorm<Eigen::Infinity>() > 1e-10) {
        DualFunctional f = ambient_->norming(residual);
        f.coeffs /= rho_;
        if (f.coeffs.dot(v) >= value - 1e-6 * (1.0 + value) &&
            dual_eval(f.coeffs) <= 1.0 + 1e-6)
          return f;
      }
      throw numerical_error(
          "hull_gauge: norming functional could not be certified for this "
          "ambient norm");
    }
  }
  throw numerical_error("hull_gauge: unreachable norming path");
}

// Dual LP over f = F^T c: maximize c . (F v) subject to sum|c| <= 1/rho and
// |f . w_i| <= 1.  Variables z = [c; a] with |c_j| <= a_j.
DualFunctional HullGaugeNorm::norming_linear(const Vector& v,
                                             double value) const {
  const int m = static_cast<int>(ambient_facets_.rows());
  const int k = static_cast<int>(gens_.cols());
  const Vector fv = ambient_facets_ * v;        // m
  const Matrix fw = ambient_facets_ * gens_;    // m x k

  LinearProgram lp;
  lp.objective = Vector::Zero(2 * m);
  lp.objective.head(m) = -fv;
  const int rows = 2 * m + 1 + 2 * k;
  lp.ineq_lhs = Matrix::Zero(rows, 2 * m);
  lp.ineq_rhs = Vector::Zero(rows);
  for (int j = 0; j < m; ++j) {
    lp.ineq_lhs(2 * j, j) = 1.0;
    lp.ineq_lhs(2 * j, m + j) = -1.0;
    lp.ineq_lhs(2 * j + 1, j) = -1.0;
    lp.ineq_lhs(2 * j + 1, m + j) = -1.0;
  }
  lp.ineq_lhs.block(2 * m, m, 1, m).setOnes();
  lp.ineq_rhs(2 * m) = 1.0 / rho_;
  for (int i = 0; i < k; ++i) {
    lp.ineq_lhs.block(2 * m + 1 + 2 * i, 0, 1, m) = fw.col(i).transpose();
    lp.ineq_rhs(2 * m + 1 + 2 * i) = 1.0;
    lp.ineq_lhs.block(2 * m + 2 + 2 * i, 0, 1, m) = -fw.col(i).transpose();
    lp.ineq_rhs(2 * m + 2 + 2 * i) = 1.0;
  }
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal)
    throw numerical_error("hull_gauge: norming LP did not reach an optimum");
  DualFunctional out;
  out.coeffs = ambient_facets_.transpose() * r.solution.head(m);
  const double attained = out.coeffs.dot(v);
  if (std::abs(attained - value) > 1e-6 * (1.0 + value))
    throw numerical_error("hull_gauge: norming LP value mismatch");
  return out;
}

DualFunctional HullGaugeNorm::norming_euclidean(const Vector& v,
                                                double value) const {
  const GaugeL2Result g = gauge_l2_ambient(gens_, v, rho_);
  const double rn = g.residual.norm();
  const double vn = v.norm();
  if (rn > 1e-12 * vn) {
    Vector f = g.residual / (rho_ * rn);
    double worst = 1.0;
    for (int j = 0; j < gens_.cols(); ++j)
      worst = std::max(worst, std::abs(f.dot(gens_.col(j))));
    if (worst <= 1.0 + 1e-8) {
      f /= worst;
      if (f.dot(v) >= value * (1.0 - 1e-7) - 1e-12) {
        DualFunctional out;
        out.coeffs = f;
        return out;
      }
    }
  }
  // Residual vanished or the slab clip lost attainment: recover f from the
  // active-generator equations f.w_i = sign(t_i), f.v = value.
  std::vector<int> active;
  for (int j = 0; j < g.t.size(); ++j)
    if (std::abs(g.t(j)) > 1e-10) active.push_back(j);
  Matrix rowsm(static_cast<int>(active.size()) + 1, dim());
  Vector rhs(static_cast<int>(active.size()) + 1);
  for (size_t a = 0; a < active.size(); ++a) {
    rowsm.row(static_cast<int>(a)) = gens_.col(active[a]).transpose();
    rhs(static_cast<int>(a)) = sign_of(g.t(active[a]));
  }
  rowsm.row(static_cast<int>(active.size())) = v.transpose();
  rhs(static_cast<int>(active.size())) = value;
  const Vector f = rowsm.colPivHouseholderQr().solve(rhs);
  const bool ball_ok = f.norm() <= (1.0 + 1e-7) / rho_;
  bool slab_ok = true;
  for (int j = 0; j < gens_.cols(); ++j)
    if (std::abs(f.dot(gens_.col(j))) > 1.0 + 1e-7) slab_ok = false;
  const bool attained = std::abs(f.dot(v) - value) <= 1e-6 * (1.0 + value);
  if (ball_ok && slab_ok && attained) {
    DualFunctional out;
    out.coeffs = f;
    return out;
  }
  throw numerical_error(
      "hull_gauge: Euclidean norming functional could not be certified");
}

// ---------------------------------------------------------------------------
// SpreadingCompositeNorm

SpreadingCompositeNorm::SpreadingCompositeNorm(NormPtr base, double eps, int m,
                                               NormPtr model,
                                               bool allow_exhaustive)
    : base_(std::move(base)),
      eps_(eps),
      m_(m),
      model_(std::move(model)),
      allow_exhaustive_(allow_exhaustive) {
  require(base_ != nullptr, "spreading_composite: null base norm");
  require(model_ != nullptr, "spreading_composite: null model norm");
  require(model_->dim() == base_->dim(),
          "spreading_composite: model dimension mismatch");
  require(is_finite(eps_) && eps_ > 0.0,
          "spreading_composite: eps must be positive");
  require(m_ >= 2 && m_ <= base_->dim(),
          "spreading_composite: support size m must be in [2, dim]");
  if (dynamic_cast<const LpNorm*>(model_.get()) == nullptr) {
    require(allow_exhaustive_,
            "spreading_composite: non-lp model requires allow_exhaustive "
            "(subset enumeration)");
    // Guard against combinatorial blowup before any eval happens.
    double combos = 1.0;
    for (int i = 0; i < m_; ++i)
      combos *= static_cast<double>(base_->dim() - i) / (i + 1);
    require(combos <= 2e5,
            "spreading_composite: exhaustive enumeration too large");
  }
}

double SpreadingCompositeNorm::spreading_branch(const Vector& v) const {
  const int n = dim();
  if (dynamic_cast<const LpNorm*>(model_.get()) != nullptr) {
    // lp models are coordinate-monotone: the m largest magnitudes win.
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    std::nth_element(idx.begin(), idx.begin() + (m_ - 1), idx.end(),
                     [&](int a, int b) {
                       return std::abs(v(a)) > std::abs(v(b)) ||
                              (std::abs(v(a)) == std::abs(v(b)) && a < b);
                     });
    Vector masked = Vector::Zero(n);
    for (int i = 0; i < m_; ++i)
      masked(idx[static_cast<size_t>(i)]) = v(idx[static_cast<size_t>(i)]);
    return model_->eval(masked);
  }
  // Exhaustive subsets of size m.
  std::vector<int> comb(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) comb[static_cast<size_t>(i)] = i;
  double best = 0.0;
  while (true) {
    Vector masked = Vector::Zero(n);
    for (int i : comb) masked(i) = v(i);
    best = std::max(best, model_->eval(masked));
    int i = m_ - 1;
    while (i >= 0 && comb[static_cast<size_t>(i)] == n - m_ + i) --i;
    if (i < 0) break;
    ++comb[static_cast<size_t>(i)];
    for (int j = i + 1; j < m_; ++j)
      comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
  }
  return best;
}

double SpreadingCompositeNorm::eval(const Vector& v) const {
  return std::max(base_->eval(v) / (1.0 + eps_), spreading_branch(v));
}

double SpreadingCompositeNorm::dual_eval(const Vector&) const {
  throw invalid_input_error(
      "spreading_composite: dual norm evaluation is not supported for this "
      "variant");
}

DualFunctional SpreadingCompositeNorm::norming(const Vector& v) const {
  const double base_val = base_->eval(v) / (1.0 + eps_);
  const double spread_val = spreading_branch(v);
  if (base_val >= spread_val) {
    DualFunctional f = base_->norming(v);
    f.coeffs /= (1.0 + eps_);
    return f;
  }
  // Norming functional of the best restricted support, extended by zero.
  const int n = dim();
  Vector best_mask;
  if (dynamic_cast<const LpNorm*>(model_.get()) != nullptr) {
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    std::nth_element(idx.begin(), idx.begin() + (m_ - 1), idx.end(),
                     [&](int a, int b) {
                       return std::abs(v(a)) > std::abs(v(b)) ||
                              (std::abs(v(a)) == std::abs(v(b)) && a < b);
                     });
    best_mask = Vector::Zero(n);
    for (int i = 0; i < m_; ++i)
      best_mask(idx[static_cast<size_t>(i)]) = v(idx[static_cast<size_t>(i)]);
  } else {
    std::vector<int> comb(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) comb[static_cast<size_t>(i)] = i;
    double best = -1.0;
    while (true) {
      Vector masked = Vector::Zero(n);
      for (int i : comb) masked(i) = v(i);
      const double val = model_->eval(masked);
      if (val > best) {
        best = val;
        best_mask = masked;
      }
      int i = m_ - 1;
      while (i >= 0 && comb[static_cast<size_t>(i)] == n - m_ + i) --i;
      if (i < 0) break;
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < m_; ++j)
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
  }
  DualFunctional f = model_->norming(best_mask);
  // Zero the functional off the support so f(x) pairs only with x|F.
  for (int i = 0; i < n; ++i)
    if (best_mask(i) == 0.0) f.coeffs(i) = 0.0;
  return f;
}

// ---------------------------------------------------------------------------
// Factories

NormPtr make_lp_norm(int dim, double p) {
  return std::make_shared<LpNorm>(dim, p);
}

NormPtr make_polyhedral_norm(Matrix facets) {
  return std::make_shared<PolyhedralNorm>(std::move(facets));
}

NormPtr make_scaled_norm(double alpha, NormPtr base) {
  return std::make_shared<ScaledNorm>(alpha, std::move(base));
}

NormPtr make_max_norm(std::vector<NormPtr> branches) {
  return std::make_shared<MaxOfNorm>(std::move(branches));
}

NormPtr make_hull_gauge(NormPtr ambient, const std::vector<Vector>& generators,
                        double rho) {
  return std::make_shared<HullGaugeNorm>(std::move(ambient), generators, rho);
}

double gauge_of_hull(double rho, const NormPtr& ambient,
                     const std::vector<Vector>& generators, const Vector& v) {
  const NormPtr gauge = make_hull_gauge(ambient, generators, rho);
  return norm_eval(gauge, v);
}

NormPtr make_spreading_composite(NormPtr base, double eps, int m,
                                 NormPtr model, bool allow_exhaustive) {
  return std::make_shared<SpreadingCompositeNorm>(std::move(base), eps, m,
                                                  std::move(model),
                                                  allow_exhaustive);
}

double spreading_composite_norm(const NormPtr& spec, const Vector& alpha) {
  require(spec != nullptr, "spreading_composite_norm: null spec");
  require(dynamic_cast<const SpreadingCompositeNorm*>(spec.get()) != nullptr,
          "spreading_composite_norm: spec is not a spreading_composite");
  return norm_eval(spec, alpha);
}

}  // namespace equinorm
