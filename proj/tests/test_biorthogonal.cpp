#include <doctest.h>

#include <cmath>

#include "equinorm/biorthogonal.hpp"
#include "equinorm/certificate.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"
#include "equinorm/rng.hpp"

using namespace equinorm;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

BiorthogonalSystem coordinate_system(int dim, const NormPtr& space) {
  BiorthogonalSystem sys;
  sys.space = space;
  for (int i = 0; i < dim; ++i) {
    Vector e = Vector::Zero(dim);
    e(i) = 1.0;
    sys.vectors.push_back(e);
    DualFunctional f;
    f.coeffs = e;
    f.dual_bound = dual_norm_eval(space, e);
    sys.bound_m = std::max(sys.bound_m, f.dual_bound);
    sys.functionals.push_back(std::move(f));
  }
  return sys;
}

}  // namespace

TEST_CASE("the coordinate system is biorthogonal") {
  BiorthogonalSystem sys = coordinate_system(3, make_lp_norm(3, 2.0));
  CHECK_NOTHROW(validate_biorthogonal(sys));
}

TEST_CASE("biorthogonal vectors certify as antipodal with separation 1") {
  BiorthogonalSystem sys = coordinate_system(3, make_lp_norm(3, 2.0));
  AntipodalCertificate cert = antipodal_from_biorthogonal(sys);
  CHECK(cert.d == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cert.c1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cert.c2 == doctest::Approx(1.0).epsilon(1e-15));
  CertificateAudit audit = verify_certificate(
      make_lp_norm(3, 2.0), make_point_set(sys.vectors), cert);
  CHECK(audit.ok);
}

TEST_CASE("a chain violation is reported with the offending entry") {
  BiorthogonalSystem sys = coordinate_system(2, make_lp_norm(2, 2.0));
  sys.functionals[0].coeffs(1) = -0.5;  // x*_1(x_2) = -0.5 breaks the chain
  CHECK_THROWS_WITH_AS(antipodal_from_biorthogonal(sys),
                       doctest::Contains("inequality chain"),
                       invalid_input_error);
  CHECK_THROWS_WITH_AS(validate_biorthogonal(sys),
                       doctest::Contains("biorthogonality fails"),
                       invalid_input_error);
}

TEST_CASE("normalizing rescales vectors to the unit sphere") {
  NormPtr spec = make_lp_norm(2, 2.0);
  BiorthogonalSystem sys;
  sys.space = spec;
  Vector x1(2), x2(2);
  x1 << 2.0, 0.0;
  x2 << 0.0, 1.0;
  sys.vectors = {x1, x2};
  DualFunctional f1, f2;
  f1.coeffs = Vector::Zero(2);
  f1.coeffs(0) = 0.5;  // keeps f1(x1) = 1
  f2.coeffs = Vector::Zero(2);
  f2.coeffs(1) = 1.0;
  sys.functionals = {f1, f2};
  BiorthogonalSystem out = normalize_biorthogonal(sys);
  CHECK(out.vectors[0](0) == doctest::Approx(1.0));
  CHECK(out.functionals[0].coeffs(0) == doctest::Approx(1.0));
  CHECK(out.bound_m == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_NOTHROW(validate_biorthogonal(out));
}

TEST_CASE("normalizing an already-normalized system changes nothing") {
  BiorthogonalSystem sys = coordinate_system(3, make_lp_norm(3, 1.0));
  BiorthogonalSystem out = normalize_biorthogonal(sys);
  for (int i = 0; i < 3; ++i) {
    CHECK((out.vectors[i] - sys.vectors[i]).cwiseAbs().maxCoeff() == 0.0);
    CHECK((out.functionals[i].coeffs - sys.functionals[i].coeffs)
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
}

TEST_CASE("diagonally scaled systems keep their certificates honest") {
  Rng rng(172);
  NormPtr spec = make_lp_norm(4, 2.0);
  BiorthogonalSystem sys;
  sys.space = spec;
  double max_scale = 0.0;
  double min_scale = kInf;
  for (int i = 0; i < 4; ++i) {
    double scale = rng.uniform(0.5, 2.0);
    max_scale = std::max(max_scale, scale);
    min_scale = std::min(min_scale, scale);
    Vector e = Vector::Zero(4);
    e(i) = 1.0;
    sys.vectors.push_back(scale * e);
    DualFunctional f;
    f.coeffs = e / scale;
    sys.functionals.push_back(std::move(f));
  }
  CHECK_NOTHROW(validate_biorthogonal(sys));
  AntipodalCertificate cert = antipodal_from_biorthogonal(sys);
  CHECK(cert.d == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cert.c1 == doctest::Approx(max_scale).epsilon(1e-12));
  CHECK(cert.c2 == doctest::Approx(1.0 / min_scale).epsilon(1e-12));
  CertificateAudit audit =
      verify_certificate(spec, make_point_set(sys.vectors), cert);
  CHECK(audit.ok);
}

TEST_CASE("a zero vector cannot be normalized") {
  BiorthogonalSystem sys = coordinate_system(2, make_lp_norm(2, 2.0));
  sys.vectors[1].setZero();
  CHECK_THROWS_WITH_AS(normalize_biorthogonal(sys),
                       doctest::Contains("zero vector"), invalid_input_error);
}

TEST_CASE("the euclidean auerbach basis is orthonormal") {
  NormPtr spec = make_lp_norm(3, 2.0);
  BiorthogonalSystem sys = auerbach_basis(spec, 3);
  CHECK_NOTHROW(validate_biorthogonal(sys, 1e-8));
  Matrix x(3, 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(norm_eval(spec, sys.vectors[i]) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(dual_norm_eval(spec, sys.functionals[i].coeffs) ==
          doctest::Approx(1.0).epsilon(1e-5));
    x.col(i) = sys.vectors[i];
  }
  // Hadamard's inequality forces |det| <= 1 with equality only at
  // orthonormal frames, which is where the search must land.
  CHECK(std::abs(x.determinant()) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(sys.bound_m <= 1.0 + 1e-5);
}

TEST_CASE("the planar sup-norm auerbach basis has +-1 coordinates") {
  NormPtr spec = make_lp_norm(2, kInf);
  BiorthogonalSystem sys = auerbach_basis(spec, 2);
  CHECK_NOTHROW(validate_biorthogonal(sys, 1e-8));
  Matrix x(2, 2);
  for (int i = 0; i < 2; ++i) {
    x.col(i) = sys.vectors[i];
    for (int k = 0; k < 2; ++k)
      CHECK(std::abs(std::abs(sys.vectors[i](k)) - 1.0) <= 1e-6);
    CHECK(dual_norm_eval(spec, sys.functionals[i].coeffs) ==
          doctest::Approx(1.0).epsilon(1e-6));
  }
  // |det| = 2 at the Hadamard frame, beating the standard basis (det 1).
  CHECK(std::abs(x.determinant()) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("auerbach postconditions hold for a skewed polyhedral norm") {
  Matrix facets(2, 2);
  facets << 1.2, 0.3, -0.4, 1.0;
  NormPtr spec = make_polyhedral_norm(facets);
  BiorthogonalSystem sys = auerbach_basis(spec, 2);
  CHECK_NOTHROW(validate_biorthogonal(sys, 1e-8));
  for (int i = 0; i < 2; ++i) {
    CHECK(norm_eval(spec, sys.vectors[i]) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(dual_norm_eval(spec, sys.functionals[i].coeffs) <= 1.0 + 1e-5);
  }
  AntipodalCertificate cert = antipodal_from_biorthogonal(sys);
  CHECK(cert.d == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("auerbach search is deterministic in the seed") {
  NormPtr spec = make_lp_norm(2, 1.0);
  BiorthogonalSystem a = auerbach_basis(spec, 2, 11);
  BiorthogonalSystem b = auerbach_basis(spec, 2, 11);
  for (int i = 0; i < 2; ++i)
    CHECK((a.vectors[i] - b.vectors[i]).cwiseAbs().maxCoeff() == 0.0);
}
