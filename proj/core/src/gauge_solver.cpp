#include "equinorm/gauge_solver.hpp"

namespace equinorm {
namespace {

double soft_threshold(double x, double lambda) {
  if (x > lambda) return x - lambda;
  if (x < -lambda) return x + lambda;
  return 0.0;
}

double lasso_primal(const Matrix& w, const Vector& v, const Vector& t,
                    double lambda) {
  return 0.5 * (v - w * t).squaredNorm() + lambda * t.lpNorm<1>();
}

// Dual lower bound from the scaled residual; zero-gap at the optimum.
double lasso_dual(const Matrix& w, const Vector& v, const Vector& residual,
                  double lambda) {
  const double corr = (w.transpose() * residual).lpNorm<Eigen::Infinity>();
  const double s = corr > lambda ? lambda / corr : 1.0;
  const Vector theta = s * residual;
  return 0.5 * v.squaredNorm() - 0.5 * (v - theta).squaredNorm();
}

}  // namespace

LassoResult solve_lasso(const Matrix& w, const Vector& v, double lambda,
                        const Vector& warm, double tol, int max_sweeps) {
  const int k = static_cast<int>(w.cols());
  require(w.rows() == v.size(), "solve_lasso: dimension mismatch");
  require(lambda >= 0.0, "solve_lasso: negative penalty");

  Vector t = (warm.size() == k) ? warm : Vector::Zero(k);
  Vector col_sq(k);
  for (int j = 0; j < k; ++j) col_sq(j) = w.col(j).squaredNorm();
  Vector residual = v - w * t;

  const double scale = std::max(1.0, 0.5 * v.squaredNorm());
  LassoResult res;
  for (res.sweeps = 0; res.sweeps < max_sweeps; ++res.sweeps) {
    for (int j = 0; j < k; ++j) {
      if (col_sq(j) < 1e-30) continue;
      const double rho_j = w.col(j).dot(residual) + col_sq(j) * t(j);
      const double t_new = soft_threshold(rho_j, lambda) / col_sq(j);
      const double delta = t(j) - t_new;
      if (delta != 0.0) {
        residual += delta * w.col(j);
        t(j) = t_new;
      }
    }
    if (res.sweeps % 8 == 7 || res.sweeps < 4) {
      const double p = lasso_primal(w, v, t, lambda);
      const double d = lasso_dual(w, v, residual, lambda);
      if (p - d <= tol * scale) {
        res.gap = p - d;
        break;
      }
    }
  }
  res.t = t;
  res.primal = lasso_primal(w, v, t, lambda);
  res.gap = res.primal - lasso_dual(w, v, v - w * t, lambda);
  return res;
}

GaugeL2Result gauge_l2_ambient(const Matrix& w, const Vector& v, double rho) {
  require(rho > 0.0, "gauge_l2_ambient: rho must be positive");
  require(w.rows() == v.size(), "gauge_l2_ambient: dimension mismatch");

  GaugeL2Result out;
  const double vn = v.norm();
  if (vn == 0.0) {
    out.t = Vector::Zero(w.cols());
    out.residual = v;
    return out;
  }

  // t = 0 is optimal iff the subdifferential condition |w_j . v| <= rho ||v||
  // holds for every generator; then G(v) = ||v|| / rho exactly.
  const double corr0 =
      w.cols() ? (w.transpose() * v).lpNorm<Eigen::Infinity>() : 0.0;
  if (corr0 <= rho * vn * (1.0 + 1e-12)) {
    out.value = vn / rho;
    out.lower_bound = out.value;
    out.gap = 0.0;
    out.t = Vector::Zero(w.cols());
    out.residual = v;
    return out;
  }

  const int k = static_cast<int>(w.cols());
  auto phi = [&](const Vector& t) {
    return (v - w * t).norm() / rho + t.lpNorm<1>();
  };

  // Candidate pool; the final answer is the best explicit t found.
  Vector best_t = Vector::Zero(k);
  double best_val = vn / rho;

  // Single-generator candidates by 1-D ternary search.
  for (int j = 0; j < k; ++j) {
    const double cn = w.col(j).norm();
    if (cn < 1e-15) continue;
    double lo = -2.0 * vn / cn, hi = 2.0 * vn / cn;
    for (int it = 0; it < 100; ++it) {
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
    const double val = phi(tc);
    if (val < best_val) {
      best_val = val;
      best_t = tc;
    }
  }

  // Ternary search over sigma (residual scale); h(sigma) is convex.
  Vector warm = best_t;
  auto eval_h = [&](double sigma) {
    const LassoResult lr = solve_lasso(w, v, sigma * rho, warm);
    warm = lr.t;
    const double val = phi(lr.t);
    if (val < best_val) {
      best_val = val;
      best_t = lr.t;
    }
    return sigma / (2.0 * rho) + (v - w * lr.t).squaredNorm() / (2.0 * sigma * rho) +
           lr.t.lpNorm<1>();
  };

  double lo = 1e-12 * vn, hi = vn;
  for (int it = 0; it < 140 && hi - lo > 1e-14 * vn; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (eval_h(m1) <= eval_h(m2))
      hi = m2;
    else
      lo = m1;
  }
  eval_h(0.5 * (lo + hi));

  // Polish the incumbent with a small exact lasso at its own residual scale.
  {
    const double sigma = std::max((v - w * best_t).norm(), 1e-12 * vn);
    const LassoResult lr = solve_lasso(w, v, sigma * rho, best_t, 1e-15, 40000);
    if (phi(lr.t) < best_val) {
      best_val = phi(lr.t);
      best_t = lr.t;
    }
  }

  out.value = best_val;
  out.t = best_t;
  out.residual = v - w * best_t;

  // Dual-feasible point: f = residual / (rho ||residual||) shrunk into the
  // slab |f . w_j| <= 1; its pairing with v lower-bounds the gauge.
  const double rn = out.residual.norm();
  if (rn > 1e-15 * vn) {
    Vector f = out.residual / (rho * rn);
    double worst = 1.0;
    for (int j = 0; j < k; ++j)
      worst = std::max(worst, std::abs(f.dot(w.col(j))));
    f /= worst;
    out.lower_bound = f.dot(v);
  } else {
    out.lower_bound = 0.0;  // v lies in the generator hull; gauge via t only
  }
  out.gap = out.value - out.lower_bound;
  return out;
}

}  // namespace equinorm
