#include "equinorm/certificate.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace equinorm {

const PairCertificate& AntipodalCertificate::pair(int i, int j,
                                                  int n_points) const {
  require(i != j && i >= 0 && j >= 0 && i < n_points && j < n_points,
          "pair indices out of range");
  // Row-major over ordered pairs with the diagonal skipped.
  int row = i * (n_points - 1);
  int col = j < i ? j : j - 1;
  auto idx = static_cast<std::size_t>(row + col);
  require(idx < pairs.size(), "certificate has too few pairs");
  const PairCertificate& p = pairs[idx];
  require(p.i == i && p.j == j, "certificate pair order is inconsistent");
  return p;
}

CertificateAudit verify_certificate(const NormPtr& spec, const PointSet& s,
                                    const AntipodalCertificate& cert,
                                    double tol) {
  validate_point_set(s);
  require(cert.c1 > 0.0 && cert.c2 > 0.0, "certificate constants must be positive");
  const int n = s.size();
  require(cert.pairs.size() == static_cast<std::size_t>(n) * (n - 1),
          "certificate must cover every ordered pair");

  CertificateAudit audit;
  audit.tol = tol;
  audit.max_point_excess = -std::numeric_limits<double>::infinity();
  audit.max_dual_excess = -std::numeric_limits<double>::infinity();
  audit.min_margin = std::numeric_limits<double>::infinity();
  audit.min_slack = std::numeric_limits<double>::infinity();

  for (int i = 0; i < n; ++i) {
    double excess = norm_eval(spec, s.points[static_cast<std::size_t>(i)]) - cert.c1;
    audit.max_point_excess = std::max(audit.max_point_excess, excess);
    if (excess > tol && audit.detail.empty()) {
      audit.detail = "point " + std::to_string(i) + " exceeds c1 by " +
                     std::to_string(excess);
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const PairCertificate& p = cert.pair(i, j, n);
      require(p.f.coeffs.size() == s.points.front().size(),
              "certificate functional has wrong dimension");

      double dual_excess = dual_norm_eval(spec, p.f.coeffs) - cert.c2;
      audit.max_dual_excess = std::max(audit.max_dual_excess, dual_excess);
      if (dual_excess > tol && audit.detail.empty()) {
        audit.detail = "functional (" + std::to_string(i) + "," +
                       std::to_string(j) + ") exceeds c2 by " +
                       std::to_string(dual_excess);
      }

      double fi = p.f(s.points[static_cast<std::size_t>(i)]);
      double fj = p.f(s.points[static_cast<std::size_t>(j)]);
      double margin = fj - fi;
      audit.min_margin = std::min(audit.min_margin, margin);
      if (margin < cert.d - tol && audit.detail.empty()) {
        audit.detail = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ") separates by " + std::to_string(margin) +
                       " < d = " + std::to_string(cert.d);
      }

      for (int k = 0; k < n; ++k) {
        double fk = p.f(s.points[static_cast<std::size_t>(k)]);
        double slack = std::min(fk - fi, fj - fk);
        audit.min_slack = std::min(audit.min_slack, slack);
        if (slack < -tol && audit.detail.empty()) {
          audit.detail = "point " + std::to_string(k) +
                         " escapes the slab of pair (" + std::to_string(i) +
                         "," + std::to_string(j) + ") by " +
                         std::to_string(-slack);
        }
      }
    }
  }

  audit.ok = audit.detail.empty() && cert.d > tol;
  if (!audit.ok && audit.detail.empty()) {
    audit.detail = "separation constant d is not positive";
  }
  return audit;
}

AntipodalCertificate rescale_certificate(const AntipodalCertificate& cert,
                                         double lambda, RescaleMode mode) {
  require(std::isfinite(lambda) && lambda > 0.0,
          "rescale factor must be positive and finite");
  AntipodalCertificate out = cert;
  out.d = lambda * cert.d;
  if (mode == RescaleMode::scale_functionals) {
    // f -> lambda f keeps the points fixed: (c1, c2, d) -> (c1, l c2, l d).
    out.c2 = lambda * cert.c2;
    for (auto& p : out.pairs) {
      p.f.coeffs *= lambda;
      p.f.dual_bound *= lambda;
      p.margin *= lambda;
      p.slack_lo *= lambda;
      p.slack_hi *= lambda;
    }
  } else {
    // S -> lambda S keeps the functionals fixed: (c1, c2, d) -> (l c1, c2, l d).
    out.c1 = lambda * cert.c1;
    for (auto& p : out.pairs) {
      p.margin *= lambda;
      p.slack_lo *= lambda;
      p.slack_hi *= lambda;
    }
  }
  return out;
}

}  // namespace equinorm
