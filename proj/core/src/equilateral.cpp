#include "equinorm/equilateral.hpp"

#include "equinorm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace equinorm {

EquilateralReport verify_equilateral(const NormPtr& spec, const PointSet& s,
                                     double tol) {
  validate_point_set(s);
  require(s.size() >= 2, "need at least two points");
  require(tol >= 0.0, "tolerance must be nonnegative");
  const int n = s.size();

  Matrix dist = pairwise_distance_matrix(spec, s);
  double lambda = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) lambda += dist(i, j);
  lambda /= static_cast<double>(pair_count(n));

  EquilateralReport report;
  report.lambda = lambda;
  report.tol = tol;
  report.deviations = Matrix::Zero(n, n);
  report.max_abs_deviation = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      report.deviations(i, j) = dist(i, j) - lambda;  // diagonal = -lambda
      if (i < j) {
        report.max_abs_deviation =
            std::max(report.max_abs_deviation, std::abs(dist(i, j) - lambda));
      }
    }
  }
  report.equilateral = report.max_abs_deviation <= tol;
  return report;
}

namespace {

// Residual vector r_(i,j) = ||x_i - x_j|| - 1, flattened over pairs i < j:
// the search drives all pairwise distances to 1.
Vector equilateral_residual(const NormPtr& spec,
                            const std::vector<Vector>& pts) {
  const int n = static_cast<int>(pts.size());
  const int pairs = pair_count(n);
  Vector dist(pairs);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dist[pair_index(i, j, n)] =
          norm_eval(spec, pts[static_cast<std::size_t>(i)] -
                              pts[static_cast<std::size_t>(j)]);
  return dist.array() - 1.0;
}

// One Gauss-Newton-style pass: for the worst pair, move both endpoints along
// the norming functional of their difference to correct the distance, scaled
// by a damping factor.  The norming functional is exactly the gradient of
// ||x_i - x_j|| in x_i, so each correction is first order exact.
double descend_to_equilateral(const NormPtr& spec, std::vector<Vector>& pts,
                              int max_iter, double tol) {
  const int n = static_cast<int>(pts.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<Vector> best_pts = pts;
  double step = 0.5;
  for (int iter = 0; iter < max_iter; ++iter) {
    Vector res = equilateral_residual(spec, pts);
    double worst = res.lpNorm<Eigen::Infinity>();
    if (worst < best) {
      best = worst;
      best_pts = pts;
      step = std::min(0.5, step * 1.2);
    } else {
      step *= 0.6;
      pts = best_pts;
      if (step < 1e-14) break;
    }
    if (best <= tol) break;

    // Correct every pair a little rather than only the worst: distribute
    // half the residual to each endpoint along the norming direction.
    std::vector<Vector> delta(pts.size(),
                              Vector::Zero(pts.front().size()));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double r = res[pair_index(i, j, n)];
        if (std::abs(r) < 0.25 * tol) continue;
        Vector diff = pts[static_cast<std::size_t>(i)] -
                      pts[static_cast<std::size_t>(j)];
        DualFunctional f = norming_functional(spec, diff);
        // d||x_i - x_j|| = f . (dx_i - dx_j); shrink or grow symmetrically.
        delta[static_cast<std::size_t>(i)] -= (step * r / 2.0) * f.coeffs;
        delta[static_cast<std::size_t>(j)] += (step * r / 2.0) * f.coeffs;
      }
    }
    for (std::size_t k = 0; k < pts.size(); ++k) pts[k] += delta[k];
  }
  pts = best_pts;
  return best;
}

}  // namespace

SearchResult search_equilateral(const NormPtr& spec, int n_points, int dim,
                                std::uint64_t seed,
                                const SearchOptions& options) {
  require(n_points >= 2, "need at least two points");
  require(dim >= 1, "dimension must be positive");
  require(spec && spec->dim() == dim, "norm dimension mismatch");

  double best_residual = std::numeric_limits<double>::infinity();
  std::vector<Vector> best_pts;
  int best_start = -1;

  for (int start = 0; start < options.n_starts; ++start) {
    Rng rng(seed + static_cast<std::uint64_t>(start) * 0x9e3779b97f4a7c15ULL);
    std::vector<Vector> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
      Vector p = rng.normal_vector(dim);
      double norm = norm_eval(spec, p);
      if (norm > 1e-12) p /= norm;  // spread starts over the unit sphere
      pts.push_back(std::move(p));
    }
    double residual =
        descend_to_equilateral(spec, pts, options.max_iter, options.tol);
    // Deterministic winner: strictly better residual, ties keep the earlier
    // start.
    if (residual < best_residual) {
      best_residual = residual;
      best_pts = pts;
      best_start = start;
    }
    if (best_residual <= options.tol) break;
  }

  if (best_residual > options.tol) {
    throw stagnation_error(
        "equilateral search stalled at residual " + std::to_string(best_residual),
        best_residual);
  }

  SearchResult result;
  result.points = make_point_set(std::move(best_pts));
  result.report = verify_equilateral(spec, result.points,
                                     std::max(options.tol, best_residual));
  result.winning_seed = best_start;
  return result;
}

AntipodalCertificate petty_certificate(const NormPtr& spec, const PointSet& s,
                                       double tol) {
  EquilateralReport report = verify_equilateral(spec, s, tol);
  if (!report.equilateral) {
    throw invalid_input_error(
        "set is not equilateral at tolerance " + std::to_string(tol) +
        ": max deviation " + std::to_string(report.max_abs_deviation));
  }
  const int n = s.size();
  const double lambda = report.lambda;

  AntipodalCertificate cert;
  cert.c2 = 1.0;
  cert.d = lambda;
  cert.c1 = 0.0;
  for (const Vector& p : s.points)
    cert.c1 = std::max(cert.c1, norm_eval(spec, p));

  cert.pairs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // f norms x_j - x_i, so f(x_j) - f(x_i) = ||x_j - x_i|| = lambda and
      // for any z:  f(x_j) - f(z) >= lambda - ||x_j - z|| ~ 0, same below.
      Vector diff = s.points[static_cast<std::size_t>(j)] -
                    s.points[static_cast<std::size_t>(i)];
      PairCertificate pc;
      pc.i = i;
      pc.j = j;
      pc.f = norming_functional(spec, diff);
      double fi = pc.f(s.points[static_cast<std::size_t>(i)]);
      double fj = pc.f(s.points[static_cast<std::size_t>(j)]);
      pc.margin = fj - fi;
      pc.slack_lo = std::numeric_limits<double>::infinity();
      pc.slack_hi = std::numeric_limits<double>::infinity();
      for (int k = 0; k < n; ++k) {
        double fk = pc.f(s.points[static_cast<std::size_t>(k)]);
        pc.slack_lo = std::min(pc.slack_lo, fk - fi);
        pc.slack_hi = std::min(pc.slack_hi, fj - fk);
      }
      cert.pairs.push_back(std::move(pc));
    }
  }
  return cert;
}

}  // namespace equinorm
