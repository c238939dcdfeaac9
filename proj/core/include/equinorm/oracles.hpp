#pragma once

// Independent reference implementations used to cross-check the fast paths:
// brute-force vertex enumeration for small LPs, a dense angular boundary
// scan for 2-D hull gauges, a 1-D grid scan, and closed-form equilateral
// configurations.  Deliberately simple and slow.

#include "equinorm/common.hpp"
#include "equinorm/linprog.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"

#include <functional>
#include <vector>

namespace equinorm {

struct VertexEnumResult {
  bool feasible = false;
  double value = 0.0;
  Vector x;
};

/// Enumerates all basic solutions (square subsystems of active constraints,
/// equality rows always included), filters by feasibility, and returns the
/// best objective.  Complete only for LPs whose feasible set is a bounded
/// polytope (callers add box constraints); intended for <= 4 variables.
VertexEnumResult brute_force_lp(const LinearProgram& lp, double tol = 1e-9);

/// Gauge of K = conv(rho * B_ambient union {+-g}) in the plane, computed
/// from an inscribed boundary polygon (n_dirs ambient boundary samples plus
/// the generators, convex hull, ray-edge intersection).  The polygon is
/// inscribed, so the result is an upper bound on the true gauge with
/// O(1/n_dirs^2) relative error.
double angular_gauge_oracle(double rho, const NormPtr& ambient,
                            const std::vector<Vector>& generators,
                            const Vector& v, int n_dirs = 4096);

/// Minimum of f over a uniform grid of n+1 points on [lo, hi].
double grid_scan_min(const std::function<double(double)>& f, double lo,
                     double hi, int n);

/// dim+1 points in R^dim with all pairwise Euclidean distances exactly 1:
/// the origin plus the Cholesky rows of the simplex Gram matrix.
PointSet regular_simplex(int dim);

}  // namespace equinorm
