#include <doctest.h>

#include "equinorm/norm.hpp"
#include "equinorm/rng.hpp"

using namespace equinorm;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("extension restricts to the subspace norm") {
  // Coefficient norm 2|t| on span{e1} inside the euclidean plane; the
  // sandwich needs ambient/c2 <= coefficient norm, so c2 = 1/2 works.
  Matrix basis(2, 1);
  basis << 1.0, 0.0;
  NormPtr coeff = make_scaled_norm(2.0, make_lp_norm(1, 1.0));
  NormPtr ext = extend_norm(make_lp_norm(2, 2.0), basis, coeff, 0.5);
  CHECK(norm_eval(ext, vec2(1.0, 0.0)) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("off-subspace directions fall back to the scaled ambient norm") {
  Matrix basis(2, 1);
  basis << 1.0, 0.0;
  NormPtr coeff = make_scaled_norm(2.0, make_lp_norm(1, 1.0));
  NormPtr ext = extend_norm(make_lp_norm(2, 2.0), basis, coeff, 0.5);
  // Minimal extensions of subspace functionals annihilate e2, leaving only
  // the ambient/c2 branch: ||e2|| / (1/2) = 2.
  CHECK(norm_eval(ext, vec2(0.0, 1.0)) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("extension of a polyhedral subspace norm keeps the sandwich on samples") {
  Matrix basis(3, 2);
  basis << 1.0, 0.0, 0.0, 1.0, 0.5, -0.5;
  Matrix facets(2, 2);
  facets << 1.0, 0.5, -0.2, 1.0;
  NormPtr coeff = make_polyhedral_norm(facets);
  NormPtr ambient = make_lp_norm(3, 2.0);
  // Pick c2 comfortably above sup ||Z t|| / coeff(t) so the domination
  // precondition holds.
  const double c2 = 10.0;
  NormPtr ext = extend_norm(ambient, basis, coeff, c2);
  Rng rng(31);
  for (int k = 0; k < 1000; ++k) {
    Vector x = rng.normal_vector(3);
    CHECK(norm_eval(ext, x) >= norm_eval(ambient, x) / c2 - 1e-9);
  }
  // On the subspace the extension agrees with the coefficient norm.
  for (int k = 0; k < 200; ++k) {
    Vector t = rng.normal_vector(2);
    CHECK(std::abs(norm_eval(ext, basis * t) - norm_eval(coeff, t)) <= 1e-6);
  }
}

TEST_CASE("dependent basis columns are rejected") {
  Matrix basis(2, 2);
  basis << 1.0, 2.0, 1.0, 2.0;
  CHECK_THROWS_AS(
      extend_norm(make_lp_norm(2, 2.0), basis, make_lp_norm(2, 2.0), 1.0),
      invalid_input_error);
}

TEST_CASE("domination failure on the subspace is rejected") {
  // ambient/c2 = 10 ||t||_2 exceeds the coefficient norm ||t||_2.
  Matrix basis(2, 1);
  basis << 1.0, 0.0;
  CHECK_THROWS_AS(
      extend_norm(make_lp_norm(2, 2.0), basis, make_lp_norm(1, 2.0), 0.1),
      invalid_input_error);
}

TEST_CASE("extension round trip keeps duality pairing") {
  Matrix basis(3, 2);
  basis << 1, 0, 0, 1, 0, 0;
  NormPtr ext =
      extend_norm(make_lp_norm(3, 2.0), basis, make_lp_norm(2, 2.0), 1.0);
  Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    Vector x = rng.normal_vector(3);
    // With an orthonormal basis and matching norms the extension is the
    // euclidean norm itself.
    CHECK(norm_eval(ext, x) == doctest::Approx(x.norm()).epsilon(1e-9));
  }
}
