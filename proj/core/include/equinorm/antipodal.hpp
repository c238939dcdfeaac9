#pragma once

// Certified antipodality testing: for each ordered pair (x, y) find a
// functional f with ||f||* <= c2 and f(x) <= f(z) <= f(y) for all z in the
// set, maximizing the separation f(y) - f(x).  A set is antipodal in the
// bounded/separated sense exactly when every pair admits such an f with
// positive separation.

#include "equinorm/certificate.hpp"
#include "equinorm/common.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"

#include <optional>
#include <string>

namespace equinorm {

struct CertifyFailure {
  int i = 0;
  int j = 0;
  double delta = 0.0;   // best achievable separation for the failing pair
  std::string reason;
};

struct CertifyResult {
  std::optional<AntipodalCertificate> certificate;
  std::optional<CertifyFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

struct CertifyOptions {
  double tol = 1e-9;
  bool parallel = true;
};

/// For every ordered pair solves  max f(x_j - x_i)  subject to ||f||* <= c2
/// and the chain constraints f(x_i) <= f(z) <= f(x_j).  Exact per variant:
/// lp(2) via projection onto the constraint cone (Lawson-Hanson NNLS),
/// lp(1)/lp(inf)/polyhedral via linear programming, scaled by unwrapping.
/// Other variants throw invalid_input_error naming the variant.  d is the
/// minimum separation over pairs; a pair with best separation <= tol
/// produces a failure witness instead of a certificate.
CertifyResult certify_antipodal(const NormPtr& spec, const PointSet& s,
                                double c2, const CertifyOptions& options = {});

/// Best uniform separation achievable with unit functionals (c2 = 1).
/// Requires every point inside the unit ball of spec (antipodality on the
/// ball: d <= 2 always).  Returns 0 when some pair cannot be separated.
double separation_margin(const NormPtr& spec, const PointSet& s,
                         const CertifyOptions& options = {});

}  // namespace equinorm
