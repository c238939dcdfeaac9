#pragma once

// Shared aliases, error types and small numeric helpers used across the
// library.  All dense linear algebra goes through Eigen double types; every
// routine that returns a numeric result is deterministic for a fixed seed.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace equinorm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Input violates a documented precondition (bad dimensions, malformed spec,
/// values outside an admissible range).
class invalid_input_error : public std::invalid_argument {
 public:
  explicit invalid_input_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A numerical routine failed to reach its contract (iteration cap hit,
/// certificate could not be validated, solver cycled).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Optimizer made no progress; carries the best objective value reached so
/// the caller can report how far the search got.
class stagnation_error : public numerical_error {
 public:
  stagnation_error(const std::string& what, double best_value)
      : numerical_error(what + " (best value " + std::to_string(best_value) +
                        ")"),
        best_value(best_value) {}
  double best_value;
};

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(const Vector& v) { return v.allFinite(); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_input_error(msg);
}

/// Number of unordered pairs {n, m} with 0 <= n < m < count.
inline int pair_count(int count) { return count * (count - 1) / 2; }

/// Flat index of the unordered pair {n, m}, n < m, in row-major order over
/// the strict upper triangle of a count x count matrix.
inline int pair_index(int n, int m, int count) {
  return n * count - n * (n + 1) / 2 + (m - n - 1);
}

/// Inverse of pair_index.
inline std::pair<int, int> pair_from_index(int idx, int count) {
  int n = 0;
  int row_len = count - 1;
  while (idx >= row_len) {
    idx -= row_len;
    --row_len;
    ++n;
  }
  return {n, n + 1 + idx};
}

inline double sign_of(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace equinorm
