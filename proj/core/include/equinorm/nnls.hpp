#pragma once

// Lawson-Hanson active-set solver for min ||A x - b||_2 with x >= 0.
// Terminates in finitely many steps; used for exact Euclidean projections
// onto finitely generated cones.

#include "equinorm/common.hpp"

namespace equinorm {

struct NnlsResult {
  Vector x;          // nonnegative coefficients
  Vector residual;   // b - A x
  double residual_norm = 0.0;
  int iterations = 0;
};

NnlsResult solve_nnls(const Matrix& a, const Vector& b, double tol = 1e-12);

/// Euclidean projection of `point` onto cone{generators columns, coeffs >= 0}.
Vector project_onto_cone(const Matrix& generators, const Vector& point,
                         double tol = 1e-12);

}  // namespace equinorm
