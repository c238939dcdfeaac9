#pragma once

// Antipodality certificates: per ordered pair (i, j) a functional f_ij that
// separates x_i from x_j with the whole set sandwiched between the two
// parallel hyperplanes, plus the global constants (c1, c2, d).

#include "equinorm/common.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"

#include <string>
#include <vector>

namespace equinorm {

struct PairCertificate {
  int i = 0;
  int j = 0;
  DualFunctional f;      // certifying functional for the ordered pair
  double margin = 0.0;   // f(x_j) - f(x_i)
  double slack_lo = 0.0; // min_z f(z) - f(x_i)  (>= 0 when valid)
  double slack_hi = 0.0; // min_z f(x_j) - f(z)  (>= 0 when valid)
};

struct AntipodalCertificate {
  double c1 = 0.0;  // points bound:      ||x_i|| <= c1
  double c2 = 0.0;  // functionals bound: ||f_ij||* <= c2
  double d = 0.0;   // separation:        f_ij(x_j) - f_ij(x_i) >= d
  std::vector<PairCertificate> pairs;  // all ordered pairs i != j, row-major

  const PairCertificate& pair(int i, int j, int n_points) const;
};

struct CertificateAudit {
  bool ok = false;
  double max_point_excess = 0.0;  // max ||x_i|| - c1
  double max_dual_excess = 0.0;   // max ||f_ij||* - c2
  double min_margin = 0.0;        // min f_ij(x_j) - f_ij(x_i)
  double min_slack = 0.0;         // min over pairs and z of chain slack
  double tol = 0.0;
  std::string detail;             // first violation, if any
};

/// Re-derives every Definition-2 inequality from scratch (norms, dual norms,
/// margins, chain slacks) and compares against the certificate constants.
CertificateAudit verify_certificate(const NormPtr& spec, const PointSet& s,
                                    const AntipodalCertificate& cert,
                                    double tol = 1e-9);

enum class RescaleMode { scale_functionals, scale_points };

/// Remark-3 rescaling.  scale_functionals: f -> lambda f, constants
/// (c1, lambda c2, lambda d).  scale_points corresponds to replacing S by
/// lambda S: constants (lambda c1, c2, lambda d).  Margins and slacks scale
/// by lambda in both modes.
AntipodalCertificate rescale_certificate(const AntipodalCertificate& cert,
                                         double lambda, RescaleMode mode);

}  // namespace equinorm
