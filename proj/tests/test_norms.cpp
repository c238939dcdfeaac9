#include <doctest.h>

#include <cmath>

#include "equinorm/norm.hpp"
#include "equinorm/rng.hpp"

using namespace equinorm;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

// Facet representation of the plane sup ball.
Matrix sup_facets_2d() {
  Matrix f(2, 2);
  f << 1.0, 0.0, 0.0, 1.0;
  return f;
}

}  // namespace

TEST_CASE("sup norm takes the largest magnitude") {
  NormPtr spec = make_lp_norm(3, kInf);
  CHECK(norm_eval(spec, vec3(1.0, -2.0, 3.0)) == 3.0);
}

TEST_CASE("euclidean norm of a 3-4 right triangle is 5") {
  NormPtr spec = make_lp_norm(2, 2.0);
  CHECK(norm_eval(spec, vec2(3.0, 4.0)) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("l1 dual norm is the sup norm of the functional") {
  NormPtr spec = make_lp_norm(2, 1.0);
  CHECK(dual_norm_eval(spec, vec2(1.0, -2.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("euclidean norm is self-dual") {
  NormPtr spec = make_lp_norm(2, 2.0);
  CHECK(dual_norm_eval(spec, vec2(3.0, 4.0)) ==
        doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("polyhedral evaluation is the facet maximum") {
  Matrix facets(3, 2);
  facets << 1.0, 0.0, 0.0, 1.0, 1.0, 1.0;
  NormPtr spec = make_polyhedral_norm(facets);
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Vector v = rng.normal_vector(2);
    double direct = 0.0;
    for (int r = 0; r < facets.rows(); ++r)
      direct = std::max(direct, std::abs(facets.row(r).dot(v)));
    CHECK(norm_eval(spec, v) == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("polyhedral l1 ball has sup-norm duality") {
  // |x_1 + x_2| <= 1 and |x_1 - x_2| <= 1 carve out the l1 ball.
  Matrix facets(2, 2);
  facets << 1.0, 1.0, 1.0, -1.0;
  NormPtr spec = make_polyhedral_norm(facets);
  NormPtr l1 = make_lp_norm(2, 1.0);
  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    Vector v = rng.normal_vector(2);
    CHECK(norm_eval(spec, v) ==
          doctest::Approx(norm_eval(l1, v)).epsilon(1e-12));
    Vector f = rng.normal_vector(2);
    CHECK(std::abs(dual_norm_eval(spec, f) -
                   f.cwiseAbs().maxCoeff()) <= 1e-9);
  }
}

TEST_CASE("norming functional of a euclidean vector is its unit direction") {
  NormPtr spec = make_lp_norm(2, 2.0);
  DualFunctional f = norming_functional(spec, vec2(3.0, 4.0));
  CHECK(f.coeffs[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(f.coeffs[1] == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("norming functional under the sup norm picks the attaining coordinate") {
  NormPtr spec = make_lp_norm(3, kInf);
  DualFunctional f = norming_functional(spec, vec3(1.0, -2.0, 3.0));
  CHECK(f.coeffs[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(f.coeffs[0]) + std::abs(f.coeffs[1]) <= 1e-12);
  CHECK(f(vec3(1.0, -2.0, 3.0)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("polyhedral norming functionals attain the norm with unit dual norm") {
  Matrix facets(3, 2);
  facets << 1.0, 0.2, -0.1, 1.0, 0.8, -0.7;
  NormPtr spec = make_polyhedral_norm(facets);
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    Vector v = rng.normal_vector(2);
    DualFunctional f = norming_functional(spec, v);
    CHECK(std::abs(f(v) - norm_eval(spec, v)) <= 1e-9);
    CHECK(dual_norm_eval(spec, f.coeffs) <= 1.0 + 1e-9);
  }
}

TEST_CASE("intermediate exponents use the conjugate for duality") {
  NormPtr spec = make_lp_norm(2, 3.0);
  CHECK(norm_eval(spec, vec2(1.0, 1.0)) ==
        doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-13));
  // Conjugate exponent 3/2.
  Vector f = vec2(1.0, 1.0);
  CHECK(dual_norm_eval(spec, f) ==
        doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-12));
  DualFunctional nf = norming_functional(spec, vec2(2.0, -1.0));
  CHECK(std::abs(nf(vec2(2.0, -1.0)) - norm_eval(spec, vec2(2.0, -1.0))) <=
        1e-9);
  CHECK(dual_norm_eval(spec, nf.coeffs) <= 1.0 + 1e-9);
}

TEST_CASE("scaling a norm divides its dual") {
  NormPtr base = make_lp_norm(2, 2.0);
  NormPtr spec = make_scaled_norm(0.7, base);
  Vector v = vec2(3.0, 4.0);
  CHECK(norm_eval(spec, v) == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(dual_norm_eval(spec, v) ==
        doctest::Approx(5.0 / 0.7).epsilon(1e-12));
  DualFunctional f = norming_functional(spec, v);
  CHECK(std::abs(f(v) - 3.5) <= 1e-9);
}

TEST_CASE("max composite norming functional attains the active branch") {
  NormPtr spec = make_max_norm({make_scaled_norm(2.0 / 3.0, make_lp_norm(4, kInf)),
                                make_scaled_norm(0.5, make_lp_norm(4, 2.0))});
  Rng rng(14);
  for (int k = 0; k < 100; ++k) {
    Vector v = rng.normal_vector(4);
    DualFunctional f = norming_functional(spec, v);
    CHECK(std::abs(f(v) - norm_eval(spec, v)) <= 1e-9);
    CHECK(dual_norm_eval(spec, f.coeffs) <= 1.0 + 1e-9);
  }
}

TEST_CASE("duality pairing bounds the dot product on every variant") {
  std::vector<NormPtr> specs;
  specs.push_back(make_lp_norm(3, 1.0));
  specs.push_back(make_lp_norm(3, 2.0));
  specs.push_back(make_lp_norm(3, 4.0));
  specs.push_back(make_lp_norm(3, kInf));
  Matrix facets(4, 3);
  facets << 1, 0, 0, 0, 1, 0, 0, 0, 1, 0.5, 0.5, 0.5;
  specs.push_back(make_polyhedral_norm(facets));
  specs.push_back(make_scaled_norm(2.0, make_lp_norm(3, 2.0)));
  specs.push_back(make_max_norm({make_lp_norm(3, 1.0), make_lp_norm(3, 2.0)}));
  Rng rng(15);
  for (const NormPtr& spec : specs) {
    for (int k = 0; k < 200; ++k) {
      Vector x = rng.normal_vector(3);
      Vector f = rng.normal_vector(3);
      CHECK(std::abs(f.dot(x)) <=
            dual_norm_eval(spec, f) * norm_eval(spec, x) + 1e-9);
    }
  }
}

TEST_CASE("zero vectors evaluate to zero") {
  CHECK(norm_eval(make_lp_norm(3, 2.0), Vector::Zero(3)) == 0.0);
  CHECK(norm_eval(make_lp_norm(3, kInf), Vector::Zero(3)) == 0.0);
}

TEST_CASE("dimension mismatches are rejected") {
  NormPtr spec = make_lp_norm(3, 2.0);
  CHECK_THROWS_AS(norm_eval(spec, Vector::Zero(2)), invalid_input_error);
  CHECK_THROWS_AS(norming_functional(spec, Vector::Zero(3)),
                  invalid_input_error);
}

TEST_CASE("polyhedral facets must span the space") {
  Matrix facets(1, 2);
  facets << 1.0, 0.0;  // rank 1: vectors along e2 would get norm 0
  CHECK_THROWS_AS(make_polyhedral_norm(facets), invalid_input_error);
}

TEST_CASE("exponents below one are not norms") {
  CHECK_THROWS_AS(make_lp_norm(2, 0.5), invalid_input_error);
}

TEST_CASE("facet oracle agrees with the sup ball written as a polytope") {
  NormPtr poly = make_polyhedral_norm(sup_facets_2d());
  NormPtr sup = make_lp_norm(2, kInf);
  Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    Vector v = rng.normal_vector(2);
    CHECK(norm_eval(poly, v) == doctest::Approx(norm_eval(sup, v)).epsilon(1e-13));
  }
}
