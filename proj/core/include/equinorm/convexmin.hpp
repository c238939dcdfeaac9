#pragma once

// Derivative-light minimizer for small convex problems that are not linear
// programs: subgradient descent with a diminishing step, followed by
// coordinate-wise ternary polish around the incumbent.

#include "equinorm/common.hpp"

#include <functional>

namespace equinorm {

struct ConvexMinOptions {
  int max_iter = 4000;
  double tol = 1e-10;        // stop when polish improves by less than this
  double initial_step = 1.0;
  bool polish = true;
  double divergence_radius = 1e8;  // iterates past this radius abort
};

struct ConvexMinResult {
  Vector x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using ObjectiveFn = std::function<double(const Vector&)>;
using SubgradientFn = std::function<Vector(const Vector&)>;

/// Minimizes a convex objective from x0.  `subgrad` may be empty, in which
/// case central finite differences are used.  Throws numerical_error when the
/// iterates diverge.
ConvexMinResult minimize_convex(const ObjectiveFn& objective,
                                const SubgradientFn& subgrad, const Vector& x0,
                                const ConvexMinOptions& options = {});

}  // namespace equinorm
