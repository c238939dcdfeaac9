#include "equinorm/renorm.hpp"

#include "equinorm/parallel.hpp"
#include "equinorm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace equinorm {

RenormResult build_antipodal_renorm(const NormPtr& spec, const PointSet& s,
                                    const AntipodalCertificate& cert,
                                    const RenormOptions& options) {
  validate_point_set(s);
  require(spec && spec->dim() == s.dim(), "norm dimension mismatch");
  require(s.size() >= 2, "need at least two points");

  if (std::abs(cert.c1 - 1.0) > 1e-9) {
    throw invalid_input_error(
        "certificate has c1 = " + std::to_string(cert.c1) +
        "; apply the rescaling with lambda = 1/c1 to the points first");
  }
  CertificateAudit audit = verify_certificate(spec, s, cert, 1e-9);
  if (!audit.ok) {
    throw invalid_input_error("certificate fails verification: " +
                              audit.detail);
  }

  const int n = s.size();
  std::vector<Vector> generators;
  generators.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      generators.push_back(s.points[static_cast<std::size_t>(i)] -
                           s.points[static_cast<std::size_t>(j)]);

  RenormResult result;
  result.rho = cert.d / cert.c2;
  result.distortion_bound = 2.0 * cert.c2 / cert.d;
  result.new_norm = make_hull_gauge(spec, generators, result.rho);

  // Support-functional certificates: g = f_ij / m_ij satisfies g(z) <= 1 on
  // every generator and on rho B_X (rho ||g||* <= 1), with equality at
  // x_j - x_i, so ||x_j - x_i||_K >= 1; the generator itself gives <= 1.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const PairCertificate& pc = cert.pair(i, j, n);
      require(pc.margin > 0.0, "certified pair has nonpositive margin");
      Vector g = pc.f.coeffs / pc.margin;
      Vector diff = s.points[static_cast<std::size_t>(j)] -
                    s.points[static_cast<std::size_t>(i)];
      if (g.dot(diff) < 1.0 - 1e-9) {
        throw numerical_error("support certificate fails at its own pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
      for (const Vector& w : generators) {
        if (std::abs(g.dot(w)) > 1.0 + 1e-9) {
          throw numerical_error(
              "support certificate of pair (" + std::to_string(i) + "," +
              std::to_string(j) + ") exceeds 1 on a generator");
        }
      }
      if (result.rho * dual_norm_eval(spec, g) > 1.0 + 1e-9) {
        throw numerical_error(
            "support certificate of pair (" + std::to_string(i) + "," +
            std::to_string(j) + ") exceeds 1 on the rho ball");
      }
    }
  }

  // The set is 1-equilateral under the gauge: every difference is a
  // generator (<= 1) and carries a support certificate (>= 1).
  std::vector<double> distances = parallel_map(
      static_cast<int>(generators.size()), [&](int k) {
        return norm_eval(result.new_norm, generators[static_cast<std::size_t>(k)]);
      });
  for (double dist : distances) {
    if (std::abs(dist - 1.0) > options.tol) {
      throw numerical_error(
          "renormed distance " + std::to_string(dist) +
          " deviates from 1 beyond tolerance " + std::to_string(options.tol));
    }
  }

  result.audit = bm_bound_audit(spec, result, options.n_dirs, options.seed);
  if (!result.audit.pass) {
    throw numerical_error("renorm sandwich audit failed: observed ratios [" +
                          std::to_string(result.audit.min_ratio) + ", " +
                          std::to_string(result.audit.max_ratio) + "]");
  }
  return result;
}

RenormResult corollary_renorm(const BiorthogonalSystem& sys,
                              const NormPtr& spec,
                              const RenormOptions& options) {
  require(spec != nullptr, "corollary_renorm: null spec");
  BiorthogonalSystem local = sys;
  local.space = spec;
  for (int a = 0; a < local.size(); ++a) {
    double norm = norm_eval(spec, local.vectors[static_cast<std::size_t>(a)]);
    if (std::abs(norm - 1.0) > 1e-9) {
      throw invalid_input_error(
          "corollary_renorm: ||x_" + std::to_string(a + 1) + "|| = " +
          std::to_string(norm) + "; normalize the system first");
    }
  }
  AntipodalCertificate cert = antipodal_from_biorthogonal(local);
  PointSet s = make_point_set(local.vectors);
  return build_antipodal_renorm(spec, s, cert, options);
}

SandwichAudit bm_bound_audit(const NormPtr& original, const RenormResult& result,
                             int n_dirs, std::uint64_t seed, double tol) {
  require(original != nullptr && result.new_norm != nullptr,
          "bm_bound_audit: null norm");
  require(original->dim() == result.new_norm->dim(),
          "bm_bound_audit: dimension mismatch");
  require(n_dirs >= 1, "need at least one direction");

  SandwichAudit audit;
  audit.n_dirs = n_dirs;
  audit.seed = seed;
  audit.tol = tol;
  audit.lower_bound = 0.5;
  audit.upper_bound = result.distortion_bound / 2.0;
  audit.min_ratio = std::numeric_limits<double>::infinity();
  audit.max_ratio = -std::numeric_limits<double>::infinity();
  audit.pass = true;

  Rng rng(seed);
  std::vector<Vector> dirs;
  dirs.reserve(static_cast<std::size_t>(n_dirs));
  for (int k = 0; k < n_dirs; ++k)
    dirs.push_back(rng.sphere_direction(original->dim()));

  std::vector<std::pair<double, double>> values =
      parallel_map(n_dirs, [&](int k) {
        const Vector& v = dirs[static_cast<std::size_t>(k)];
        return std::make_pair(norm_eval(original, v),
                              norm_eval(result.new_norm, v));
      });

  for (const auto& [orig, gauge] : values) {
    if (orig <= 0.0) {
      audit.pass = false;
      continue;
    }
    double ratio = gauge / orig;
    audit.min_ratio = std::min(audit.min_ratio, ratio);
    audit.max_ratio = std::max(audit.max_ratio, ratio);
    if (gauge < audit.lower_bound * orig - tol ||
        gauge > audit.upper_bound * orig + tol) {
      audit.pass = false;
    }
  }
  return audit;
}

}  // namespace equinorm
