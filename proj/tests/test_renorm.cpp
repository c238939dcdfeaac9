#include <doctest.h>

#include <cmath>

#include "equinorm/antipodal.hpp"
#include "equinorm/biorthogonal.hpp"
#include "equinorm/certificate.hpp"
#include "equinorm/equilateral.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/oracles.hpp"
#include "equinorm/pointset.hpp"
#include "equinorm/renorm.hpp"
#include "equinorm/rng.hpp"

using namespace equinorm;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

BiorthogonalSystem coordinate_system(int dim, const NormPtr& space,
                                     double scale = 1.0) {
  BiorthogonalSystem sys;
  sys.space = space;
  for (int i = 0; i < dim; ++i) {
    Vector e = Vector::Zero(dim);
    e(i) = 1.0;
    sys.vectors.push_back(scale * e);
    DualFunctional f;
    f.coeffs = e / scale;
    f.dual_bound = dual_norm_eval(space, f.coeffs);
    sys.bound_m = std::max(sys.bound_m, f.dual_bound * scale);
    sys.functionals.push_back(std::move(f));
  }
  return sys;
}

RenormResult renorm_two_points(const NormPtr& spec, const Vector& v) {
  std::vector<Vector> pts = {Vector::Zero(v.size()), v};
  PointSet s = make_point_set(pts);
  CertifyResult cr = certify_antipodal(spec, s, 1.0);
  REQUIRE(cr.ok());
  return build_antipodal_renorm(spec, s, *cr.certificate);
}

}  // namespace

TEST_CASE("a certified unit segment has gauge distance exactly 1") {
  Vector e1 = Vector::Zero(2);
  e1(0) = 1.0;
  Vector diag = Vector::Ones(2);
  Matrix facets(2, 2);
  facets << 1.0, 0.0, 0.0, 1.0;
  struct Case {
    NormPtr spec;
    Vector v;
  };
  std::vector<Case> cases = {{make_lp_norm(2, 2.0), e1},
                             {make_lp_norm(2, 1.0), e1},
                             {make_lp_norm(2, kInf), diag},
                             {make_polyhedral_norm(facets), diag}};
  for (const Case& c : cases) {
    std::string variant = c.spec->kind();
    CAPTURE(variant);
    RenormResult r = renorm_two_points(c.spec, c.v);
    CHECK(std::abs(norm_eval(r.new_norm, c.v) - 1.0) <= 1e-6);
    CHECK(r.audit.pass);
  }
}

TEST_CASE("the euclidean basis renorms to unit distances with rho 1") {
  NormPtr spec = make_lp_norm(3, 2.0);
  BiorthogonalSystem sys = coordinate_system(3, spec);
  AntipodalCertificate cert = antipodal_from_biorthogonal(sys);
  PointSet basis = standard_basis_set(3);
  RenormResult r = build_antipodal_renorm(spec, basis, cert);
  CHECK(r.rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.distortion_bound == doctest::Approx(2.0).epsilon(1e-12));
  Matrix dist = pairwise_distance_matrix(r.new_norm, basis);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(dist(i, j) - 1.0) <= 1e-6);
}

TEST_CASE("the square renorm doubles the sup ball") {
  NormPtr spec = make_lp_norm(2, kInf);
  PointSet cube = hypercube_vertices(2);
  CertifyResult cr = certify_antipodal(spec, cube, 1.0);
  REQUIRE(cr.ok());
  RenormResult r = build_antipodal_renorm(spec, cube, *cr.certificate);
  CHECK(r.rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.distortion_bound == doctest::Approx(1.0).epsilon(1e-12));
  Matrix dist = pairwise_distance_matrix(r.new_norm, cube);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(dist(i, j) - 1.0) <= 1e-6);
  // K collapses to 2 B_inf, so the gauge halves the sup norm everywhere.
  Rng rng(5150);
  std::vector<Vector> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      gens.push_back(cube.points[static_cast<std::size_t>(i)] -
                     cube.points[static_cast<std::size_t>(j)]);
  for (int t = 0; t < 25; ++t) {
    Vector v = rng.sphere_direction(2);
    double got = norm_eval(r.new_norm, v);
    CHECK(got == doctest::Approx(0.5 * norm_eval(spec, v)).epsilon(1e-9));
    double oracle = angular_gauge_oracle(r.rho, spec, gens, v);
    CHECK(std::abs(got - oracle) <= 1e-3 * std::abs(oracle));
  }
}

TEST_CASE("the biorthogonal pipeline reports distortion bound 2") {
  NormPtr spec = make_lp_norm(3, 2.0);
  BiorthogonalSystem sys = coordinate_system(3, spec);
  RenormResult r = corollary_renorm(sys, spec);
  CHECK(std::abs(r.distortion_bound - 2.0) <= 1e-12);
  CHECK(r.rho == doctest::Approx(1.0).epsilon(1e-12));
  Matrix dist = pairwise_distance_matrix(r.new_norm, standard_basis_set(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(dist(i, j) - 1.0) <= 1e-6);
}

TEST_CASE("normalizing first matches rescaling the certificate by hand") {
  NormPtr spec = make_lp_norm(3, 2.0);
  BiorthogonalSystem stretched = coordinate_system(3, spec, 2.0);

  RenormResult via_normalize =
      corollary_renorm(normalize_biorthogonal(stretched), spec);

  AntipodalCertificate raw = antipodal_from_biorthogonal(stretched);
  REQUIRE(raw.c1 == doctest::Approx(2.0));
  AntipodalCertificate scaled =
      rescale_certificate(raw, 1.0 / raw.c1, RescaleMode::scale_points);
  std::vector<Vector> shrunk;
  for (const Vector& p : stretched.vectors) shrunk.push_back(p / raw.c1);
  RenormResult via_rescale =
      build_antipodal_renorm(spec, make_point_set(shrunk), scaled);

  CHECK(via_normalize.rho == doctest::Approx(via_rescale.rho).epsilon(1e-12));
  CHECK(via_normalize.distortion_bound ==
        doctest::Approx(via_rescale.distortion_bound).epsilon(1e-12));
  Rng rng(31337);
  for (int t = 0; t < 50; ++t) {
    Vector v = rng.normal_vector(3);
    CHECK(norm_eval(via_normalize.new_norm, v) ==
          doctest::Approx(norm_eval(via_rescale.new_norm, v)).epsilon(1e-9));
  }
}

TEST_CASE("non-unit systems are sent back to normalization") {
  NormPtr spec = make_lp_norm(3, 2.0);
  BiorthogonalSystem stretched = coordinate_system(3, spec, 2.0);
  CHECK_THROWS_WITH_AS(corollary_renorm(stretched, spec),
                       doctest::Contains("normalize the system first"),
                       invalid_input_error);
}

TEST_CASE("certificates with c1 away from 1 are sent back to rescaling") {
  NormPtr spec = make_lp_norm(2, 2.0);
  std::vector<Vector> pts(2, Vector::Zero(2));
  pts[1] << 2.0, 0.0;
  PointSet s = make_point_set(pts);
  CertifyResult cr = certify_antipodal(spec, s, 1.0);
  REQUIRE(cr.ok());
  REQUIRE(cr.certificate->c1 == doctest::Approx(2.0));
  CHECK_THROWS_WITH_AS(build_antipodal_renorm(spec, s, *cr.certificate),
                       doctest::Contains("apply the rescaling"),
                       invalid_input_error);
}

TEST_CASE("the identity renorm audits with unit ratios") {
  NormPtr spec = make_lp_norm(3, 2.0);
  RenormResult identity;
  identity.new_norm = make_hull_gauge(spec, {}, 1.0);
  identity.rho = 1.0;
  identity.distortion_bound = 2.0;
  SandwichAudit audit = bm_bound_audit(spec, identity, 200, 99);
  CHECK(audit.pass);
  CHECK(audit.min_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(audit.max_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(audit.lower_bound == doctest::Approx(0.5));
  CHECK(audit.upper_bound == doctest::Approx(1.0));
}

TEST_CASE("audited ratios stay inside the Banach-Mazur sandwich") {
  NormPtr spec = make_lp_norm(3, 2.0);
  RenormResult r = corollary_renorm(coordinate_system(3, spec), spec);
  SandwichAudit audit = bm_bound_audit(spec, r, 1000, 0x5eed);
  CHECK(audit.pass);
  CHECK(audit.n_dirs == 1000);
  CHECK(audit.min_ratio >= 0.5 - 1e-9);
  CHECK(audit.max_ratio <= 1.0 + 1e-9);
}

TEST_CASE("the square's audit pins both ratios at one half") {
  NormPtr spec = make_lp_norm(2, kInf);
  PointSet cube = hypercube_vertices(2);
  CertifyResult cr = certify_antipodal(spec, cube, 1.0);
  REQUIRE(cr.ok());
  RenormResult r = build_antipodal_renorm(spec, cube, *cr.certificate);
  SandwichAudit audit = bm_bound_audit(spec, r, 500, 7);
  CHECK(audit.pass);
  CHECK(audit.min_ratio == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(audit.max_ratio == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("renormed bases close under the equilateral-to-antipodal passage") {
  NormPtr spec = make_lp_norm(3, 2.0);
  RenormResult r = corollary_renorm(coordinate_system(3, spec), spec);
  PointSet basis = standard_basis_set(3);
  EquilateralReport report = verify_equilateral(r.new_norm, basis, 1e-6);
  CHECK(report.equilateral);
  CHECK(report.lambda == doctest::Approx(1.0).epsilon(1e-6));
  AntipodalCertificate cert = petty_certificate(r.new_norm, basis, 1e-6);
  CHECK(std::abs(cert.d - report.lambda) <= 1e-6);
}
