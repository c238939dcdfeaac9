#pragma once

// Deterministic random sampling.  std::mt19937_64 has a fixed bit stream,
// but the standard distributions do not, so the transforms below are written
// out by hand to keep sampled test values reproducible across toolchains.

#include "equinorm/common.hpp"

#include <random>

namespace equinorm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() {
    return (engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  int uniform_int(int n) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
  }

  /// Standard normal via Box-Muller; one cached mate per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Vector normal_vector(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = normal();
    return v;
  }

  Vector uniform_vector(int dim, double lo, double hi) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = uniform(lo, hi);
    return v;
  }

  /// Uniform direction on the Euclidean sphere (nonzero by construction).
  Vector sphere_direction(int dim) {
    Vector v = normal_vector(dim);
    double n = v.norm();
    while (n < 1e-12) {
      v = normal_vector(dim);
      n = v.norm();
    }
    return v / n;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace equinorm
