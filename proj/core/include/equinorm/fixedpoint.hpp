#pragma once

// Fixed-point construction of infinite-flavor equilateral sets in spaces
// whose norm is sandwiched by the sup norm:  ||x|| <= ||x||_inf <= (3/2)||x||.
// Points p_n(eps) live in R^N with p_n = (eps_{1,n}, .., eps_{n-1,n}, -1, 0, ..)
// and the update  phi_{n,m}(eps) = 1 + eps_{n,m} - ||p_n - p_m||  has a fixed
// point in the cube [0, 1/2]^{N(N-1)/2}; at a fixed point all pairwise
// distances equal 1.

#include "equinorm/common.hpp"
#include "equinorm/equilateral.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"

#include <cstdint>

namespace equinorm {

enum class FixedPointStatus { converged, max_iter, diverged };

struct FixedPointState {
  int n_points = 0;
  Vector eps;               // packed upper-triangular (n, m), n < m
  std::vector<double> residuals;  // sup-norm residual per iteration
  FixedPointStatus status = FixedPointStatus::max_iter;
  int iterations = 0;
};

/// The points p_1..p_N in R^N determined by the parameter vector eps
/// (packed pairs (n, m), n < m, index via pair_index).  p_n has
/// coordinates eps_{k,n} for k < n, then -1 at slot n, then zeros.
PointSet make_p_points(const Vector& eps, int n_points);

/// One application of the map phi: component (n, m) of the result is
/// 1 + eps_{n,m} - ||p_n - p_m||.  Validates the sandwich inequality on
/// every difference vector p_n - p_m encountered and throws
/// invalid_input_error when the norm escapes it.
Vector phi_step(const NormPtr& spec, const Vector& eps, int n_points);

struct FixedPointOptions {
  double damping = 0.5;        // eps <- (1 - theta) eps + theta phi(eps)
  int fallback_max_iter = 600; // projected-descent budget after oscillation
};

struct FixedPointRun {
  PointSet points;           // make_p_points at the final eps
  FixedPointState state;
  EquilateralReport report;  // deviations from the common distance 1
};

/// Searches for eps in [0, 1/2]^{N(N-1)/2} with phi(eps) = eps via damped
/// iteration from eps = 0, falling back to projected gradient descent on
/// (1/2)||phi(eps) - eps||^2 when the residual stops decreasing.  At a fixed
/// point the points of make_p_points are 1-equilateral; the final residual
/// bounds the deviation of every pairwise distance from 1.
FixedPointRun find_equilateral_c0(const NormPtr& spec, int n_points,
                                  double tol = 1e-10, int max_iter = 400,
                                  const FixedPointOptions& options = {});

struct SandwichCheck {
  bool pass = false;
  double min_ratio = 0.0;  // min ||x||_inf / ||x||
  double max_ratio = 0.0;  // max ||x||_inf / ||x||
  int n_samples = 0;
};

/// Samples random directions in R^dim and verifies
/// ||x|| <= ||x||_inf <= (3/2) ||x||  within tol on each.
SandwichCheck check_sandwich(const NormPtr& spec, int dim, int n_samples,
                             std::uint64_t seed, double tol = 1e-9);

}  // namespace equinorm
