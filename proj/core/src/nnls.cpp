#include "equinorm/nnls.hpp"

#include <limits>

namespace equinorm {

NnlsResult solve_nnls(const Matrix& a, const Vector& b, double tol) {
  const int n = static_cast<int>(a.cols());
  require(a.rows() == b.size(), "solve_nnls: dimension mismatch");
  require(n > 0, "solve_nnls: no columns");

  const double scale = std::max(1.0, b.norm());
  const double eps = tol * scale;

  Vector x = Vector::Zero(n);
  std::vector<bool> passive(static_cast<size_t>(n), false);
  Vector residual = b;
  int iters = 0;
  const int max_outer = 6 * n + 30;

  while (iters < max_outer) {
    ++iters;
    const Vector w = a.transpose() * residual;
    int best = -1;
    double best_w = eps;
    for (int j = 0; j < n; ++j) {
      if (!passive[static_cast<size_t>(j)] && w(j) > best_w) {
        best_w = w(j);
        best = j;
      }
    }
    if (best < 0) break;  // KKT satisfied
    passive[static_cast<size_t>(best)] = true;

    // Inner loop: least squares on the passive set, stepping back to the
    // feasible region whenever a passive coefficient would go nonpositive.
    while (true) {
      std::vector<int> idx;
      for (int j = 0; j < n; ++j)
        if (passive[static_cast<size_t>(j)]) idx.push_back(j);
      Matrix ap(a.rows(), static_cast<int>(idx.size()));
      for (size_t k = 0; k < idx.size(); ++k)
        ap.col(static_cast<int>(k)) = a.col(idx[k]);
      const Vector z = ap.colPivHouseholderQr().solve(b);

      bool all_positive = true;
      for (int k = 0; k < z.size(); ++k)
        if (z(k) <= eps) all_positive = false;
      if (all_positive) {
        x.setZero();
        for (size_t k = 0; k < idx.size(); ++k)
          x(idx[k]) = z(static_cast<int>(k));
        break;
      }
      double alpha = std::numeric_limits<double>::infinity();
      for (size_t k = 0; k < idx.size(); ++k) {
        const double zk = z(static_cast<int>(k));
        if (zk <= eps) {
          const double xk = x(idx[k]);
          if (xk - zk > 0) alpha = std::min(alpha, xk / (xk - zk));
        }
      }
      if (!std::isfinite(alpha)) alpha = 0.0;
      for (size_t k = 0; k < idx.size(); ++k) {
        const int j = idx[k];
        x(j) += alpha * (z(static_cast<int>(k)) - x(j));
        if (x(j) <= eps) {
          x(j) = 0.0;
          passive[static_cast<size_t>(j)] = false;
        }
      }
    }
    residual = b - a * x;
  }

  NnlsResult res;
  res.x = x;
  res.residual = residual;
  res.residual_norm = residual.norm();
  res.iterations = iters;
  return res;
}

Vector project_onto_cone(const Matrix& generators, const Vector& point,
                         double tol) {
  const NnlsResult r = solve_nnls(generators, point, tol);
  return generators * r.x;
}

}  // namespace equinorm
