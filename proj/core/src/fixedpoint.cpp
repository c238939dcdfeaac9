#include "equinorm/fixedpoint.hpp"

#include "equinorm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace equinorm {

namespace {

void check_eps(const Vector& eps, int n_points) {
  require(n_points >= 2, "need at least two points");
  require(eps.size() == pair_count(n_points),
          "eps must have one entry per pair: expected " +
              std::to_string(pair_count(n_points)) + ", got " +
              std::to_string(eps.size()));
  require(is_finite(eps), "eps is not finite");
}

std::string brief_vector(const Vector& x) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < x.size() && i < 8; ++i) {
    if (i) out += ", ";
    out += std::to_string(x[i]);
  }
  if (x.size() > 8) out += ", ...";
  return out + ")";
}

// Sandwich precondition ||x|| <= ||x||_inf <= (3/2) ||x||, checked on the
// vector actually fed to the norm; the witnessing sample is reported.
void check_sandwich_on(const NormPtr& spec, const Vector& x, double tol) {
  double v = norm_eval(spec, x);
  double s = x.lpNorm<Eigen::Infinity>();
  if (v > s + tol * std::max(1.0, s) ||
      s > 1.5 * v + tol * std::max(1.0, s)) {
    throw invalid_input_error(
        "norm escapes the sup-norm sandwich at x = " + brief_vector(x) +
        ": ||x|| = " + std::to_string(v) +
        ", ||x||_inf = " + std::to_string(s));
  }
}

}  // namespace

PointSet make_p_points(const Vector& eps, int n_points) {
  check_eps(eps, n_points);
  PointSet s;
  s.points.reserve(static_cast<std::size_t>(n_points));
  s.labels.reserve(static_cast<std::size_t>(n_points));
  for (int n = 0; n < n_points; ++n) {
    Vector p = Vector::Zero(n_points);
    for (int k = 0; k < n; ++k) p[k] = eps[pair_index(k, n, n_points)];
    p[n] = -1.0;
    s.points.push_back(std::move(p));
    s.labels.push_back("p" + std::to_string(n + 1));
  }
  return s;
}

Vector phi_step(const NormPtr& spec, const Vector& eps, int n_points) {
  check_eps(eps, n_points);
  require(spec && spec->dim() == n_points, "norm dimension mismatch");
  PointSet pts = make_p_points(eps, n_points);
  Vector out(eps.size());
  for (int n = 0; n < n_points; ++n) {
    for (int m = n + 1; m < n_points; ++m) {
      Vector diff = pts.points[static_cast<std::size_t>(n)] -
                    pts.points[static_cast<std::size_t>(m)];
      check_sandwich_on(spec, diff, 1e-9);
      int idx = pair_index(n, m, n_points);
      // For eps in the cube, ||p_n - p_m||_inf = 1 + eps_{n,m}; the result
      // is ||diff||_inf - ||diff||, which the sandwich confines to [0, 1/2].
      out[idx] = 1.0 + eps[idx] - norm_eval(spec, diff);
    }
  }
  return out;
}

namespace {

double residual_of(const Vector& phi, const Vector& eps) {
  return (phi - eps).lpNorm<Eigen::Infinity>();
}

Vector clamp_to_cube(Vector eps) {
  for (Eigen::Index i = 0; i < eps.size(); ++i)
    eps[i] = std::clamp(eps[i], 0.0, 0.5);
  return eps;
}

// Gradient of R(eps) = (1/2) ||phi(eps) - eps||^2 assembled from the norming
// functionals f of the difference vectors: the derivative of ||p_n - p_m||
// in eps_{k,n} is f[k] (k < n), in eps_{k,m} is -f[k] (k < m).
Vector residual_gradient(const NormPtr& spec, const Vector& eps, int n_points,
                         const Vector& phi) {
  PointSet pts = make_p_points(eps, n_points);
  Vector grad = Vector::Zero(eps.size());
  for (int n = 0; n < n_points; ++n) {
    for (int m = n + 1; m < n_points; ++m) {
      int p = pair_index(n, m, n_points);
      double r = phi[p] - eps[p];
      if (r == 0.0) continue;
      Vector diff = pts.points[static_cast<std::size_t>(n)] -
                    pts.points[static_cast<std::size_t>(m)];
      DualFunctional f = norming_functional(spec, diff);
      for (int k = 0; k < n; ++k)
        grad[pair_index(k, n, n_points)] -= r * f.coeffs[k];
      for (int k = 0; k < m; ++k) {
        if (k == n) continue;
        grad[pair_index(k, m, n_points)] += r * f.coeffs[k];
      }
      // The diagonal pair combines d phi / d eps = 1 + f[n] with the -1 of
      // the residual itself.
      grad[p] += r * f.coeffs[n];
    }
  }
  return grad;
}

}  // namespace

namespace {

FixedPointState run_fixed_point(const NormPtr& spec, int n_points, double tol,
                                int max_iter, const FixedPointOptions& options) {
  FixedPointState state;
  state.n_points = n_points;
  state.eps = Vector::Zero(pair_count(n_points));
  state.status = FixedPointStatus::max_iter;

  const double theta = options.damping;
  double best_residual = std::numeric_limits<double>::infinity();
  Vector best_eps = state.eps;
  int since_improvement = 0;

  for (int iter = 0; iter < max_iter; ++iter) {
    Vector phi = phi_step(spec, state.eps, n_points);
    double res = residual_of(phi, state.eps);
    state.residuals.push_back(res);
    ++state.iterations;

    if (!std::isfinite(res)) {
      state.status = FixedPointStatus::diverged;
      state.eps = best_eps;
      return state;
    }
    if (res < best_residual) {
      best_residual = res;
      best_eps = state.eps;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (res <= tol) {
      state.status = FixedPointStatus::converged;
      return state;
    }
    if (since_improvement >= 10) break;  // oscillating: switch methods

    state.eps = clamp_to_cube((1.0 - theta) * state.eps + theta * phi);
  }

  // Fallback: projected descent on R(eps) = (1/2)||phi(eps) - eps||^2 with
  // the analytic gradient, Armijo backtracking on the cube.
  state.eps = best_eps;
  double step = 1.0;
  for (int iter = 0; iter < options.fallback_max_iter; ++iter) {
    Vector phi = phi_step(spec, state.eps, n_points);
    double res = residual_of(phi, state.eps);
    state.residuals.push_back(res);
    ++state.iterations;
    if (res < best_residual) {
      best_residual = res;
      best_eps = state.eps;
    }
    if (res <= tol) {
      state.status = FixedPointStatus::converged;
      return state;
    }

    double value = 0.5 * (phi - state.eps).squaredNorm();
    Vector grad = residual_gradient(spec, state.eps, n_points, phi);
    double gnorm = grad.norm();
    if (gnorm < 1e-16) break;

    bool accepted = false;
    for (int bt = 0; bt < 50; ++bt) {
      Vector trial = clamp_to_cube(state.eps - step * grad);
      Vector trial_phi = phi_step(spec, trial, n_points);
      double trial_value = 0.5 * (trial_phi - trial).squaredNorm();
      double decrease = grad.dot(state.eps - trial);
      if (trial_value <= value - 1e-4 * decrease && trial_value < value) {
        state.eps = trial;
        step = std::min(step * 1.5, 1e3);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no descent direction left at machine scale
  }

  state.eps = best_eps;
  if (!std::isfinite(best_residual)) {
    state.status = FixedPointStatus::diverged;
  }
  return state;
}

}  // namespace

FixedPointRun find_equilateral_c0(const NormPtr& spec, int n_points,
                                  double tol, int max_iter,
                                  const FixedPointOptions& options) {
  require(n_points >= 2, "need at least two points");
  require(spec && spec->dim() == n_points, "norm dimension mismatch");
  require(tol > 0.0, "tolerance must be positive");
  require(max_iter >= 1, "max_iter must be positive");

  FixedPointRun run;
  run.state = run_fixed_point(spec, n_points, tol, max_iter, options);
  run.points = make_p_points(run.state.eps, n_points);
  run.report = verify_equilateral(spec, run.points, tol);
  return run;
}

SandwichCheck check_sandwich(const NormPtr& spec, int dim, int n_samples,
                             std::uint64_t seed, double tol) {
  require(spec && spec->dim() == dim, "norm dimension mismatch");
  require(n_samples >= 1, "need at least one sample");
  Rng rng(seed);
  SandwichCheck check;
  check.n_samples = n_samples;
  check.min_ratio = std::numeric_limits<double>::infinity();
  check.max_ratio = -std::numeric_limits<double>::infinity();
  check.pass = true;
  for (int i = 0; i < n_samples; ++i) {
    Vector x = rng.normal_vector(dim);
    double v = norm_eval(spec, x);
    double s = x.lpNorm<Eigen::Infinity>();
    if (v <= 0.0) {
      check.pass = false;
      continue;
    }
    double ratio = s / v;
    check.min_ratio = std::min(check.min_ratio, ratio);
    check.max_ratio = std::max(check.max_ratio, ratio);
    if (ratio < 1.0 - tol || ratio > 1.5 + tol) check.pass = false;
  }
  return check;
}

}  // namespace equinorm
