#include <doctest.h>

#include <cmath>

#include "equinorm/gauge_solver.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/oracles.hpp"
#include "equinorm/rng.hpp"

using namespace equinorm;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("gauge of a bare half-radius ball doubles the norm") {
  NormPtr ambient = make_lp_norm(2, 2.0);
  CHECK(gauge_of_hull(0.5, ambient, {}, vec2(1.0, 0.0)) ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("a generator lies on the boundary of its own hull") {
  NormPtr ambient = make_lp_norm(2, 2.0);
  Vector diff = vec2(1.0, -1.0);  // e1 - e2
  CHECK(gauge_of_hull(1.0, ambient, {diff}, diff) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("generators longer than the ball shrink the gauge below the ambient norm") {
  NormPtr ambient = make_lp_norm(2, 2.0);
  Vector w = vec2(2.0, 0.0);
  // Along w the hull reaches twice as far as the unit ball.
  CHECK(gauge_of_hull(1.0, ambient, {w}, vec2(1.0, 0.0)) ==
        doctest::Approx(0.5).epsilon(1e-9));
  // Orthogonal directions only see the ball.
  CHECK(gauge_of_hull(1.0, ambient, {w}, vec2(0.0, 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("polyhedral-ambient hull gauges match the angular boundary scan") {
  Rng rng(21);
  for (int instance = 0; instance < 5; ++instance) {
    const int n_facets = 3 + int(rng.uniform_int(3));
    Matrix facets(n_facets, 2);
    for (int r = 0; r < n_facets; ++r) {
      double theta = 2.0 * 3.14159265358979 * (r + rng.uniform(0.1, 0.5)) /
                     n_facets;
      facets.row(r) << std::cos(theta) * rng.uniform(0.7, 1.4),
          std::sin(theta) * rng.uniform(0.7, 1.4);
    }
    NormPtr ambient = make_polyhedral_norm(facets);
    double rho = rng.uniform(0.4, 1.6);
    std::vector<Vector> gens = {1.5 * rng.normal_vector(2),
                                rng.normal_vector(2)};
    for (int q = 0; q < 40; ++q) {
      Vector v = rng.normal_vector(2);
      double fast = gauge_of_hull(rho, ambient, gens, v);
      double oracle = angular_gauge_oracle(rho, ambient, gens, v);
      CHECK(std::abs(fast - oracle) <= 1e-3 * std::max(oracle, 1e-12));
    }
  }
}

TEST_CASE("euclidean-ambient hull gauges match the angular boundary scan") {
  Rng rng(22);
  NormPtr ambient = make_lp_norm(2, 2.0);
  std::vector<Vector> gens = {vec2(1.3, 0.4), vec2(-0.2, 1.1)};
  for (int q = 0; q < 60; ++q) {
    Vector v = rng.normal_vector(2);
    double fast = gauge_of_hull(0.8, ambient, gens, v);
    double oracle = angular_gauge_oracle(0.8, ambient, gens, v);
    CHECK(std::abs(fast - oracle) <= 1e-3 * std::max(oracle, 1e-12));
  }
}

TEST_CASE("hull gauge values sit between the two enclosing balls") {
  // rho * B inside K inside U * B for U = max(rho, longest generator).
  Rng rng(23);
  for (int instance = 0; instance < 4; ++instance) {
    const int dim = 3;
    NormPtr ambient = make_lp_norm(dim, 2.0);
    double rho = rng.uniform(0.3, 1.5);
    std::vector<Vector> gens;
    double longest = rho;
    for (int j = 0; j < 2; ++j) {
      gens.push_back(rng.normal_vector(dim));
      longest = std::max(longest, norm_eval(ambient, gens.back()));
    }
    for (int q = 0; q < 50; ++q) {
      Vector v = rng.normal_vector(dim);
      double g = gauge_of_hull(rho, ambient, gens, v);
      double a = norm_eval(ambient, v);
      CHECK(g >= a / longest - 1e-8);
      CHECK(g <= a / rho + 1e-8);
    }
  }
}

TEST_CASE("hull gauge norm objects are symmetric even from one-sided generators") {
  NormPtr ambient = make_lp_norm(2, 2.0);
  NormPtr spec = make_hull_gauge(ambient, {vec2(2.0, 1.0)}, 0.7);
  Rng rng(24);
  for (int k = 0; k < 50; ++k) {
    Vector v = rng.normal_vector(2);
    CHECK(norm_eval(spec, v) == doctest::Approx(norm_eval(spec, -v)).epsilon(1e-12));
  }
}

TEST_CASE("empty generators with unit radius reproduce the ambient norm") {
  NormPtr ambient = make_lp_norm(3, 2.0);
  NormPtr spec = make_hull_gauge(ambient, {}, 1.0);
  Rng rng(25);
  for (int k = 0; k < 50; ++k) {
    Vector v = rng.normal_vector(3);
    CHECK(norm_eval(spec, v) ==
          doctest::Approx(norm_eval(ambient, v)).epsilon(1e-9));
  }
}

TEST_CASE("hull gauge duality pairing and norming functionals hold up") {
  NormPtr ambient = make_lp_norm(2, 2.0);
  NormPtr spec = make_hull_gauge(ambient, {vec2(1.0, -1.0)}, 1.0);
  Rng rng(26);
  for (int k = 0; k < 100; ++k) {
    Vector x = rng.normal_vector(2);
    Vector f = rng.normal_vector(2);
    CHECK(std::abs(f.dot(x)) <=
          dual_norm_eval(spec, f) * norm_eval(spec, x) + 1e-7);
    DualFunctional nf = norming_functional(spec, x);
    CHECK(std::abs(nf(x) - norm_eval(spec, x)) <= 1e-6);
    CHECK(dual_norm_eval(spec, nf.coeffs) <= 1.0 + 1e-6);
  }
}

TEST_CASE("lasso inner solver reaches a tiny duality gap") {
  Rng rng(27);
  Matrix w(3, 2);
  w << 1.0, 0.2, -0.4, 1.1, 0.3, -0.7;
  for (int k = 0; k < 20; ++k) {
    Vector v = rng.normal_vector(3);
    LassoResult r = solve_lasso(w, v, 0.3);
    CHECK(r.gap <= 1e-10);
  }
}

TEST_CASE("euclidean gauge solver certifies its value with a dual bound") {
  Rng rng(28);
  Matrix w(3, 2);
  w << 1.2, 0.3, 0.3, 1.0, -0.5, 0.8;
  for (int k = 0; k < 30; ++k) {
    Vector v = rng.normal_vector(3);
    GaugeL2Result r = gauge_l2_ambient(w, v, 0.9);
    // The dual point shrinks the residual direction into the slab, so the
    // certified gap is conservative relative to the primal accuracy.
    CHECK(r.gap <= 1e-7);
    CHECK(r.value >= r.lower_bound - 1e-12);
    // The reported combination reproduces the primal value.
    double replay = (v - w * r.t).norm() / 0.9 + r.t.cwiseAbs().sum();
    CHECK(std::abs(replay - r.value) <= 1e-10);
  }
}
