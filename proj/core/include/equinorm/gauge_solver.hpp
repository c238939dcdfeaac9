#pragma once

// Minkowski gauge of conv(rho * B_2 union {columns of W, symmetrized}) as an
// infimal convolution:
//
//   G(v) = min_t ||v - W t||_2 / rho + ||t||_1.
//
// The Euclidean term is lifted to its quadratic-over-linear form, giving a
// convex scalar profile in the scale sigma whose inner problem is a lasso:
//
//   G(v) = min_{sigma > 0} sigma/(2 rho) +
//          (1/(sigma rho)) min_t [ 1/2 ||v - W t||^2 + sigma rho ||t||_1 ].
//
// Ternary search over sigma with warm-started coordinate descent inside.
// Every evaluation plugs an explicit t into the original objective, so the
// reported value is always an upper bound on the true gauge; a dual-feasible
// point provides the matching lower bound (gap).

#include "equinorm/common.hpp"

namespace equinorm {

struct LassoResult {
  Vector t;
  double primal = 0.0;
  double gap = 0.0;
  int sweeps = 0;
};

/// min_t 1/2 ||v - W t||^2 + lambda ||t||_1 by cyclic coordinate descent with
/// exact coordinate updates.  `warm` may be empty.
LassoResult solve_lasso(const Matrix& w, const Vector& v, double lambda,
                        const Vector& warm = Vector(), double tol = 1e-13,
                        int max_sweeps = 20000);

struct GaugeL2Result {
  double value = 0.0;      // upper bound on the gauge, tight at convergence
  double lower_bound = 0.0;
  double gap = 0.0;        // value - lower_bound
  Vector t;                // minimizing combination
  Vector residual;         // v - W t
};

/// Gauge of conv(rho * B_2 union {+-w_j}) at v.  W may have zero columns
/// (they are ignored).  rho must be positive.
GaugeL2Result gauge_l2_ambient(const Matrix& w, const Vector& v, double rho);

}  // namespace equinorm
