#pragma once

// Biorthogonal systems (x_a, x_a*) with x_a*(x_b) = delta_ab: the vectors of
// such a system form an antipodal set with d = 1, certified directly by the
// functionals of the system.  Auerbach bases are the canonical source.

#include "equinorm/certificate.hpp"
#include "equinorm/common.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"

#include <cstdint>
#include <vector>

namespace equinorm {

struct BiorthogonalSystem {
  std::vector<Vector> vectors;            // x_a
  std::vector<DualFunctional> functionals;  // x_a*
  double bound_m = 0.0;  // max ||x_a|| ||x_a*||*, filled by normalize
  NormPtr space;         // the norm the system lives in

  int size() const { return static_cast<int>(vectors.size()); }
};

/// Checks sizes, dimensions and x_a*(x_b) = delta_ab within tol.  Throws
/// invalid_input_error naming the first violating entry.
void validate_biorthogonal(const BiorthogonalSystem& sys, double tol = 1e-9);

/// Rescales to unit vectors: y_a = x_a / ||x_a||, y_a* = ||x_a|| x_a*.
/// Biorthogonality is preserved, every ||y_a*||* is at most the original
/// bound M = max ||x_a|| ||x_a*||*, and bound_m is refreshed.  Throws
/// invalid_input_error on a zero vector.
BiorthogonalSystem normalize_biorthogonal(const BiorthogonalSystem& sys);

/// Proposition-1 passage: the set {x_a} is antipodal with c1 = max ||x_a||,
/// c2 = max ||x_a*||*, d = 1; the ordered pair (a, b) is certified by x_b*
/// via the chain 0 = x_b*(x_a) <= x_b*(x_z) <= x_b*(x_b) = 1.  The chain
/// inequalities 0 <= x_b*(x_a) <= 1 are validated first (they are what the
/// proof actually uses, and near-biorthogonal systems may break them), so a
/// system violating both reports the chain defect naming the entry; exact
/// biorthogonality is then checked at tol.
AntipodalCertificate antipodal_from_biorthogonal(const BiorthogonalSystem& sys,
                                                 double tol = 1e-9);

struct AuerbachOptions {
  int n_seeds = 32;
  int max_iter = 300;
  double tol = 1e-6;
};

/// Auerbach basis for spec on R^dim: unit vectors x_i and unit functionals
/// f_i with f_i(x_j) = delta_ij.  Found by maximizing |det| over products of
/// unit spheres (projected ascent plus exchange polish when the norm exposes
/// dual argmax points); the functionals are the rows of X^{-1}, which are
/// biorthogonal by construction and have dual norm 1 at a maximizer.
/// Throws stagnation_error with the best determinant when no seed produces
/// functionals within tol of the unit dual sphere.
BiorthogonalSystem auerbach_basis(const NormPtr& spec, int dim,
                                  std::uint64_t seed = 0x5eed,
                                  const AuerbachOptions& options = {});

}  // namespace equinorm
