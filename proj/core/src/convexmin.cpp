#include "equinorm/convexmin.hpp"

namespace equinorm {
namespace {

Vector finite_difference_subgrad(const ObjectiveFn& f, const Vector& x,
                                 double h) {
  Vector g(x.size());
  Vector probe = x;
  for (int i = 0; i < x.size(); ++i) {
    const double saved = probe(i);
    probe(i) = saved + h;
    const double up = f(probe);
    probe(i) = saved - h;
    const double dn = f(probe);
    probe(i) = saved;
    g(i) = (up - dn) / (2.0 * h);
  }
  return g;
}

// One round of per-coordinate ternary search with bracket half-width h.
// Returns the improved value; x is updated in place.
double ternary_round(const ObjectiveFn& f, Vector& x, double fx, double h) {
  for (int i = 0; i < x.size(); ++i) {
    double lo = x(i) - h;
    double hi = x(i) + h;
    for (int it = 0; it < 60; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      Vector p1 = x, p2 = x;
      p1(i) = m1;
      p2(i) = m2;
      if (f(p1) <= f(p2))
        hi = m2;
      else
        lo = m1;
    }
    Vector cand = x;
    cand(i) = 0.5 * (lo + hi);
    const double fc = f(cand);
    if (fc < fx) {
      x = cand;
      fx = fc;
    }
  }
  return fx;
}

}  // namespace

ConvexMinResult minimize_convex(const ObjectiveFn& objective,
                                const SubgradientFn& subgrad, const Vector& x0,
                                const ConvexMinOptions& opt) {
  require(static_cast<bool>(objective), "minimize_convex: empty objective");
  require(x0.size() > 0, "minimize_convex: empty start point");

  Vector x = x0;
  Vector best_x = x0;
  double best_f = objective(x0);
  require(is_finite(best_f), "minimize_convex: objective not finite at x0");

  const double fd_h = 1e-7 * (1.0 + x0.norm());
  int k = 0;
  for (; k < opt.max_iter; ++k) {
    Vector g = subgrad ? subgrad(x)
                       : finite_difference_subgrad(objective, x, fd_h);
    const double gn = g.norm();
    if (gn < 1e-14) break;  // subgradient zero: x is optimal
    const double step = opt.initial_step / ((1.0 + k / 10.0) * gn);
    x -= step * g;
    if (x.norm() > opt.divergence_radius)
      throw numerical_error("minimize_convex: iterates diverged");
    const double fx = objective(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }

  ConvexMinResult res;
  res.x = best_x;
  res.value = best_f;
  res.iterations = k;
  res.converged = true;
  if (opt.polish) {
    double h = 0.5 * opt.initial_step;
    for (int round = 0; round < 40 && h > 1e-15; ++round) {
      const double before = res.value;
      res.value = ternary_round(objective, res.x, res.value, h);
      h *= 0.25;
      if (before - res.value < opt.tol && h < 1e-9) break;
    }
  }

  // Non-coercivity guard: diminishing normalized steps bound the total path
  // length, so escaping iterates alone cannot reveal an unbounded objective.
  // Probe the net descent ray instead; a convex function still far below the
  // incumbent at the divergence radius has no minimum along that ray.
  const Vector dir = res.x - x0;
  const double dn = dir.norm();
  if (dn > 1e-9 * (1.0 + x0.norm())) {
    const double far = objective(x0 + (opt.divergence_radius / dn) * dir);
    if (far < res.value - 1e3 * (1.0 + std::abs(res.value)))
      throw numerical_error(
          "minimize_convex: objective decreases without bound along the "
          "descent ray (non-coercive)");
  }
  return res;
}

}  // namespace equinorm
