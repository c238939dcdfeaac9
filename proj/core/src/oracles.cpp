#include "equinorm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace equinorm {

namespace {

bool vertex_feasible(const LinearProgram& lp, const Vector& x, double tol) {
  if (lp.ineq_lhs.rows() > 0) {
    Vector slack = lp.ineq_rhs - lp.ineq_lhs * x;
    if (slack.minCoeff() < -tol) return false;
  }
  if (lp.eq_lhs.rows() > 0) {
    Vector resid = lp.eq_lhs * x - lp.eq_rhs;
    if (resid.lpNorm<Eigen::Infinity>() > tol) return false;
  }
  return true;
}

}  // namespace

VertexEnumResult brute_force_lp(const LinearProgram& lp, double tol) {
  const int n = lp.num_vars();
  const int mi = static_cast<int>(lp.ineq_lhs.rows());
  const int me = static_cast<int>(lp.eq_lhs.rows());
  require(n >= 1, "lp has no variables");
  require(me <= n, "more equality rows than variables");

  VertexEnumResult best;
  best.value = std::numeric_limits<double>::infinity();

  // Choose n - me inequality rows to activate alongside all equality rows.
  const int k = n - me;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;

  auto try_subset = [&]() {
    Matrix a(n, n);
    Vector b(n);
    for (int r = 0; r < me; ++r) {
      a.row(r) = lp.eq_lhs.row(r);
      b[r] = lp.eq_rhs[r];
    }
    for (int r = 0; r < k; ++r) {
      a.row(me + r) = lp.ineq_lhs.row(pick[static_cast<std::size_t>(r)]);
      b[me + r] = lp.ineq_rhs[pick[static_cast<std::size_t>(r)]];
    }
    Eigen::FullPivLU<Matrix> lu(a);
    if (!lu.isInvertible()) return;
    Vector x = lu.solve(b);
    if (!is_finite(x)) return;
    if (!vertex_feasible(lp, x, tol)) return;
    double value = lp.objective.dot(x);
    if (value < best.value) {
      best.feasible = true;
      best.value = value;
      best.x = x;
    }
  };

  if (k == 0) {
    if (me == n) try_subset();
  } else {
    require(k <= mi, "not enough inequality rows to pin a vertex");
    while (true) {
      try_subset();
      // Next k-combination of {0..mi-1} in lexicographic order.
      int i = k - 1;
      while (i >= 0 &&
             pick[static_cast<std::size_t>(i)] == mi - k + i)
        --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int r = i + 1; r < k; ++r)
        pick[static_cast<std::size_t>(r)] = pick[static_cast<std::size_t>(r - 1)] + 1;
    }
  }
  return best;
}

namespace {

double cross2(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; returns hull vertices in counterclockwise order.
std::vector<Vector> convex_hull_2d(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vector& a, const Vector& b) {
                          return a[0] == b[0] && a[1] == b[1];
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Vector> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

double angular_gauge_oracle(double rho, const NormPtr& ambient,
                            const std::vector<Vector>& generators,
                            const Vector& v, int n_dirs) {
  require(ambient && ambient->dim() == 2, "oracle requires a 2-D ambient");
  require(v.size() == 2 && is_finite(v), "oracle requires a 2-D query");
  require(rho > 0.0, "rho must be positive");
  if (v.lpNorm<Eigen::Infinity>() == 0.0) return 0.0;

  std::vector<Vector> boundary;
  boundary.reserve(static_cast<std::size_t>(n_dirs) + 2 * generators.size());
  for (int kdir = 0; kdir < n_dirs; ++kdir) {
    double angle = 2.0 * M_PI * kdir / n_dirs;
    Vector u(2);
    u << std::cos(angle), std::sin(angle);
    double norm = norm_eval(ambient, u);
    require(norm > 1e-12, "degenerate ambient ball");
    boundary.push_back((rho / norm) * u);
  }
  for (const Vector& g : generators) {
    boundary.push_back(g);
    boundary.push_back(-g);
  }

  std::vector<Vector> hull = convex_hull_2d(std::move(boundary));
  require(hull.size() >= 3, "boundary polygon is degenerate");

  // The ray {t v : t > 0} leaves the polygon through exactly one edge; the
  // gauge is 1/t at the crossing.
  double best_t = 0.0;
  const std::size_t m = hull.size();
  for (std::size_t e = 0; e < m; ++e) {
    const Vector& a = hull[e];
    const Vector& b = hull[(e + 1) % m];
    // Solve t v = a + s (b - a) for (t, s).
    Matrix sys(2, 2);
    sys << v[0], a[0] - b[0], v[1], a[1] - b[1];
    Eigen::FullPivLU<Matrix> lu(sys);
    if (!lu.isInvertible()) continue;
    Vector ts = lu.solve((Vector(2) << a[0], a[1]).finished());
    double t = ts[0];
    double s = ts[1];
    if (t > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) {
      best_t = std::max(best_t, t);
    }
  }
  require(best_t > 0.0, "ray missed the boundary polygon");
  return 1.0 / best_t;
}

double grid_scan_min(const std::function<double(double)>& f, double lo,
                     double hi, int n) {
  require(n >= 1 && hi > lo, "bad grid");
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    double t = lo + (hi - lo) * i / n;
    best = std::min(best, f(t));
  }
  return best;
}

PointSet regular_simplex(int dim) {
  require(dim >= 1, "dimension must be positive");
  // Gram matrix of the non-origin vertices: diagonal 1, off-diagonal 1/2,
  // which forces ||x_i|| = 1 and ||x_i - x_j|| = 1.
  Matrix gram = Matrix::Constant(dim, dim, 0.5);
  gram.diagonal().setOnes();
  Eigen::LLT<Matrix> llt(gram);
  require(llt.info() == Eigen::Success, "simplex Gram factorization failed");
  Matrix l = llt.matrixL();
  PointSet s;
  s.points.push_back(Vector::Zero(dim));
  s.labels.push_back("v0");
  for (int i = 0; i < dim; ++i) {
    s.points.push_back(l.row(i).transpose());
    s.labels.push_back("v" + std::to_string(i + 1));
  }
  return s;
}

}  // namespace equinorm
