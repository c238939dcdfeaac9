#include <doctest.h>

#include <cmath>

#include "equinorm/convexmin.hpp"
#include "equinorm/oracles.hpp"

using namespace equinorm;

namespace {

Vector scalar(double t) { return Vector::Constant(1, t); }

}  // namespace

TEST_CASE("absolute value is minimized at zero") {
  auto f = [](const Vector& x) { return std::abs(x[0]); };
  ConvexMinResult r = minimize_convex(f, {}, scalar(3.0));
  CHECK(r.value <= 1e-8);
  CHECK(std::abs(r.x[0]) <= 1e-7);
}

TEST_CASE("shifted quadratic is minimized at its vertex") {
  auto f = [](const Vector& x) { return (x[0] - 2.0) * (x[0] - 2.0); };
  auto g = [](const Vector& x) { return scalar(2.0 * (x[0] - 2.0)); };
  ConvexMinResult r = minimize_convex(f, g, scalar(-5.0));
  CHECK(std::abs(r.x[0] - 2.0) <= 1e-5);
  CHECK(r.value <= 1e-9);
}

TEST_CASE("residual-plus-l1 profile matches a dense grid scan") {
  Vector v(2), w(2);
  v << 1.0, 2.0;
  w << 0.5, -1.0;
  auto f = [&](const Vector& t) {
    return (v - t[0] * w).norm() + std::abs(t[0]);
  };
  ConvexMinResult r = minimize_convex(f, {}, scalar(0.0));
  double grid = grid_scan_min([&](double t) { return f(scalar(t)); },
                              -10.0, 10.0, 2000000);
  CHECK(std::abs(r.value - grid) <= 1e-6);
}

TEST_CASE("linear descent without a minimum is flagged as divergent") {
  auto f = [](const Vector& x) { return -x[0]; };
  CHECK_THROWS_AS(minimize_convex(f, {}, scalar(0.0)), numerical_error);
}

TEST_CASE("identical inputs give identical iterates") {
  auto f = [](const Vector& x) { return x.squaredNorm() + std::abs(x[0]); };
  Vector x0(2);
  x0 << 1.0, -2.0;
  ConvexMinResult a = minimize_convex(f, {}, x0);
  ConvexMinResult b = minimize_convex(f, {}, x0);
  CHECK(a.value == b.value);
  CHECK((a.x - b.x).cwiseAbs().maxCoeff() == 0.0);
}
