#include "equinorm/biorthogonal.hpp"

#include "equinorm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace equinorm {

namespace {

void check_shapes(const BiorthogonalSystem& sys) {
  require(sys.space != nullptr, "biorthogonal system has no norm attached");
  require(!sys.vectors.empty(), "biorthogonal system is empty");
  require(sys.vectors.size() == sys.functionals.size(),
          "vector and functional counts differ");
  const int dim = sys.space->dim();
  for (const Vector& x : sys.vectors) {
    require(x.size() == dim && is_finite(x), "malformed system vector");
  }
  for (const DualFunctional& f : sys.functionals) {
    require(f.coeffs.size() == dim && is_finite(f.coeffs),
            "malformed system functional");
  }
}

}  // namespace

void validate_biorthogonal(const BiorthogonalSystem& sys, double tol) {
  check_shapes(sys);
  const int n = sys.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      double value = sys.functionals[static_cast<std::size_t>(a)](
          sys.vectors[static_cast<std::size_t>(b)]);
      double target = a == b ? 1.0 : 0.0;
      if (std::abs(value - target) > tol) {
        throw invalid_input_error(
            "biorthogonality fails: x*_" + std::to_string(a + 1) + "(x_" +
            std::to_string(b + 1) + ") = " + std::to_string(value) +
            ", expected " + std::to_string(target));
      }
    }
  }
}

BiorthogonalSystem normalize_biorthogonal(const BiorthogonalSystem& sys) {
  check_shapes(sys);
  BiorthogonalSystem out = sys;
  out.bound_m = 0.0;
  for (int a = 0; a < sys.size(); ++a) {
    auto ia = static_cast<std::size_t>(a);
    double norm = norm_eval(sys.space, sys.vectors[ia]);
    require(norm > 1e-12,
            "zero vector in system at index " + std::to_string(a + 1));
    out.vectors[ia] = sys.vectors[ia] / norm;
    out.functionals[ia].coeffs = norm * sys.functionals[ia].coeffs;
    double dual = dual_norm_eval(sys.space, out.functionals[ia].coeffs);
    out.functionals[ia].dual_bound = dual;
    out.bound_m = std::max(out.bound_m, dual);  // ||y_a|| = 1 after scaling
  }
  return out;
}

AntipodalCertificate antipodal_from_biorthogonal(const BiorthogonalSystem& sys,
                                                 double tol) {
  check_shapes(sys);
  const int n = sys.size();

  // The inequality chain 0 <= x_b*(x_a) <= 1 is validated before exact
  // biorthogonality: it is the property the certificate rests on, and a
  // system that breaks both should report the chain defect.
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      double value = sys.functionals[static_cast<std::size_t>(b)](
          sys.vectors[static_cast<std::size_t>(a)]);
      if (value < -tol || value > 1.0 + tol) {
        throw invalid_input_error(
            "inequality chain fails: x*_" + std::to_string(b + 1) + "(x_" +
            std::to_string(a + 1) + ") = " + std::to_string(value) +
            " is outside [0, 1]");
      }
    }
  }
  validate_biorthogonal(sys, tol);

  AntipodalCertificate cert;
  cert.c1 = 0.0;
  cert.c2 = 0.0;
  for (int a = 0; a < n; ++a) {
    cert.c1 = std::max(
        cert.c1, norm_eval(sys.space, sys.vectors[static_cast<std::size_t>(a)]));
    cert.c2 = std::max(cert.c2,
                       dual_norm_eval(
                           sys.space,
                           sys.functionals[static_cast<std::size_t>(a)].coeffs));
  }

  cert.d = std::numeric_limits<double>::infinity();
  cert.pairs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // Pair (x_i, x_j) is certified by x_j*:  x_j*(x_i) ~ 0,
      // x_j*(x_j) = 1, and every other value sits inside [0, 1].
      PairCertificate pc;
      pc.i = i;
      pc.j = j;
      pc.f = sys.functionals[static_cast<std::size_t>(j)];
      pc.f.dual_bound = cert.c2;
      double fi = pc.f(sys.vectors[static_cast<std::size_t>(i)]);
      double fj = pc.f(sys.vectors[static_cast<std::size_t>(j)]);
      pc.margin = fj - fi;
      pc.slack_lo = std::numeric_limits<double>::infinity();
      pc.slack_hi = std::numeric_limits<double>::infinity();
      for (int k = 0; k < n; ++k) {
        double fk = pc.f(sys.vectors[static_cast<std::size_t>(k)]);
        pc.slack_lo = std::min(pc.slack_lo, fk - fi);
        pc.slack_hi = std::min(pc.slack_hi, fj - fk);
      }
      cert.d = std::min(cert.d, pc.margin);
      cert.pairs.push_back(std::move(pc));
    }
  }
  return cert;
}

namespace {

double abs_det(const Matrix& x) {
  return std::abs(Eigen::FullPivLU<Matrix>(x).determinant());
}

// Normalizes every column to the unit sphere of spec.
void normalize_columns(const NormPtr& spec, Matrix& x) {
  for (int c = 0; c < x.cols(); ++c) {
    double norm = norm_eval(spec, x.col(c));
    require(norm > 1e-12, "degenerate column during normalization");
    x.col(c) /= norm;
  }
}

struct AscentOutcome {
  Matrix x;
  double det = 0.0;
};

// Projected gradient ascent on |det| over the product of unit spheres.  The
// gradient of log|det X| in column j is row j of X^{-1}.
AscentOutcome ascend_determinant(const NormPtr& spec, Matrix x, int max_iter) {
  const int d = static_cast<int>(x.cols());
  double det = abs_det(x);
  double step = 0.5;
  for (int iter = 0; iter < max_iter && det > 1e-300; ++iter) {
    Eigen::FullPivLU<Matrix> lu(x);
    if (!lu.isInvertible()) break;
    Matrix inv = lu.inverse();
    Matrix trial = x;
    for (int j = 0; j < d; ++j)
      trial.col(j) += step * inv.row(j).transpose();
    normalize_columns(spec, trial);
    double trial_det = abs_det(trial);
    if (trial_det > det * (1.0 + 1e-14)) {
      x = trial;
      det = trial_det;
      step = std::min(step * 1.3, 2.0);
    } else {
      step *= 0.5;
      if (step < 1e-12) break;
    }
  }
  return {std::move(x), det};
}

// Exchange polish: while some cofactor functional f_i has dual norm > 1, the
// column swap x_i <- argmax of f_i over the ball multiplies |det| by that
// dual norm (det is linear in each column and f_i(x_i) = 1).
double exchange_polish(const NormPtr& spec, Matrix& x, int max_iter,
                       double tol) {
  double worst = std::numeric_limits<double>::infinity();
  for (int round = 0; round < max_iter; ++round) {
    Eigen::FullPivLU<Matrix> lu(x);
    if (!lu.isInvertible()) return worst;
    Matrix inv = lu.inverse();
    worst = 0.0;
    int swap_col = -1;
    for (int i = 0; i < x.cols(); ++i) {
      double dual = dual_norm_eval(spec, inv.row(i).transpose());
      worst = std::max(worst, dual);
      if (dual > 1.0 + 0.1 * tol && swap_col < 0) swap_col = i;
    }
    if (swap_col < 0) return worst;
    Vector replacement =
        spec->dual_argmax(inv.row(swap_col).transpose());
    double norm = norm_eval(spec, replacement);
    if (norm <= 1e-12) return worst;
    x.col(swap_col) = replacement / norm;
  }
  return worst;
}

}  // namespace

BiorthogonalSystem auerbach_basis(const NormPtr& spec, int dim,
                                  std::uint64_t seed,
                                  const AuerbachOptions& options) {
  require(spec != nullptr, "auerbach_basis: null spec");
  require(dim >= 1 && spec->dim() == dim, "norm dimension mismatch");

  double best_det = 0.0;
  double best_worst_dual = std::numeric_limits<double>::infinity();
  Matrix best_x;

  for (int s = 0; s < options.n_seeds; ++s) {
    Rng rng(seed + static_cast<std::uint64_t>(s) * 0x9e3779b97f4a7c15ULL);
    Matrix x(dim, dim);
    for (int j = 0; j < dim; ++j) x.col(j) = rng.normal_vector(dim);
    if (abs_det(x) < 1e-12) continue;
    normalize_columns(spec, x);

    AscentOutcome out = ascend_determinant(spec, std::move(x), options.max_iter);
    double worst_dual;
    if (spec->supports_dual_argmax()) {
      worst_dual = exchange_polish(spec, out.x, options.max_iter, options.tol);
      out.det = abs_det(out.x);
    } else {
      Eigen::FullPivLU<Matrix> lu(out.x);
      if (!lu.isInvertible()) continue;
      Matrix inv = lu.inverse();
      worst_dual = 0.0;
      for (int i = 0; i < dim; ++i)
        worst_dual = std::max(worst_dual,
                              dual_norm_eval(spec, inv.row(i).transpose()));
    }

    // Deterministic winner: larger determinant, ties keep the earlier seed.
    if (out.det > best_det * (1.0 + 1e-12)) {
      best_det = out.det;
      best_worst_dual = worst_dual;
      best_x = out.x;
    }
    if (best_worst_dual <= 1.0 + options.tol && dim <= 2) break;
  }

  if (best_x.size() == 0 || best_worst_dual > 1.0 + options.tol) {
    throw stagnation_error(
        "auerbach_basis: functionals stay outside the unit dual sphere",
        best_det);
  }

  BiorthogonalSystem sys;
  sys.space = spec;
  Matrix inv = Eigen::FullPivLU<Matrix>(best_x).inverse();
  sys.bound_m = 0.0;
  for (int i = 0; i < dim; ++i) {
    sys.vectors.push_back(best_x.col(i));
    DualFunctional f;
    f.coeffs = inv.row(i).transpose();
    f.dual_bound = dual_norm_eval(spec, f.coeffs);
    sys.bound_m = std::max(
        sys.bound_m, f.dual_bound * norm_eval(spec, best_x.col(i)));
    sys.functionals.push_back(std::move(f));
  }
  return sys;
}

}  // namespace equinorm
