#pragma once

// Equilateral point sets: verification, randomized search, and the Petty-style
// passage from an equilateral set to an antipodality certificate.

#include "equinorm/certificate.hpp"
#include "equinorm/common.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"

namespace equinorm {

struct EquilateralReport {
  double lambda = 0.0;         // common distance estimate (mean of pairwise)
  Matrix deviations;           // [i][j] = ||x_i - x_j|| - lambda, diag = -lambda
  double max_abs_deviation = 0.0;  // over i < j
  bool equilateral = false;    // max_abs_deviation <= tol
  double tol = 0.0;
};

/// Measures how far a set is from being lambda-equilateral. lambda is the
/// mean pairwise distance; requires at least two points.
EquilateralReport verify_equilateral(const NormPtr& spec, const PointSet& s,
                                     double tol = 1e-9);

struct SearchOptions {
  int n_starts = 16;
  int max_iter = 400;
  double tol = 1e-10;
};

struct SearchResult {
  PointSet points;
  EquilateralReport report;
  int winning_seed = 0;
};

/// Randomized multistart search for an n_points equilateral set in dim
/// dimensions under spec.  Deterministic for a fixed seed: ties between
/// starts break by (residual, start index).  Throws stagnation_error with
/// the best residual achieved if no start reaches tolerance.
SearchResult search_equilateral(const NormPtr& spec, int n_points, int dim,
                                std::uint64_t seed,
                                const SearchOptions& options = {});

/// Petty's construction: every lambda-equilateral set is antipodal with
/// c1 = max ||x_i||, c2 = 1, d = lambda.  The pair (i, j) is certified by a
/// functional norming x_j - x_i; the triangle inequality forces every other
/// point between the two hyperplanes.  Throws invalid_input_error when the
/// set fails verify_equilateral at tol.
AntipodalCertificate petty_certificate(const NormPtr& spec, const PointSet& s,
                                       double tol = 1e-9);

}  // namespace equinorm
