#include <doctest.h>

#include <cmath>

#include "equinorm/certificate.hpp"
#include "equinorm/equilateral.hpp"
#include "equinorm/fixedpoint.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/oracles.hpp"
#include "equinorm/rng.hpp"

using namespace equinorm;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("the l1 basis is 2-equilateral") {
  EquilateralReport r =
      verify_equilateral(make_lp_norm(3, 1.0), standard_basis_set(3));
  CHECK(r.lambda == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.max_abs_deviation == 0.0);
  CHECK(r.equilateral);
}

TEST_CASE("the euclidean basis is sqrt(2)-equilateral") {
  EquilateralReport r =
      verify_equilateral(make_lp_norm(3, 2.0), standard_basis_set(3));
  CHECK(r.lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.max_abs_deviation <= 1e-15);
}

TEST_CASE("deviation entries match directly recomputed distances") {
  Rng rng(61);
  NormPtr spec = make_lp_norm(2, kInf);
  std::vector<Vector> pts = {rng.normal_vector(2), rng.normal_vector(2),
                             rng.normal_vector(2)};
  PointSet s = make_point_set(pts);
  EquilateralReport r = verify_equilateral(spec, s);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) sum += norm_eval(spec, pts[i] - pts[j]);
  double lambda = sum / 3.0;
  CHECK(r.lambda == doctest::Approx(lambda).epsilon(1e-14));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(r.deviations(i, j) ==
            doctest::Approx(norm_eval(spec, pts[i] - pts[j]) - lambda)
                .epsilon(1e-12));
    }
}

TEST_CASE("two points are always an equilateral set at unit target") {
  SearchResult r = search_equilateral(make_lp_norm(3, 2.0), 2, 3, 99);
  CHECK(r.report.max_abs_deviation <= 1e-10);
  CHECK(std::abs(norm_eval(make_lp_norm(3, 2.0),
                           r.points.points[0] - r.points.points[1]) -
                 1.0) <= 1e-10);
}

TEST_CASE("search recovers a euclidean simplex") {
  NormPtr spec = make_lp_norm(3, 2.0);
  SearchResult r = search_equilateral(spec, 4, 3, 7);
  // Residual at the reference simplex is zero, so the search must get close.
  PointSet reference = regular_simplex(3);
  EquilateralReport ref_report = verify_equilateral(spec, reference, 1e-9);
  CHECK(ref_report.equilateral);
  double residual = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double gap =
          norm_eval(spec, r.points.points[i] - r.points.points[j]) - 1.0;
      residual += gap * gap;
    }
  CHECK(residual < 1e-10);
}

TEST_CASE("search finds four equilateral points in the sup-norm plane") {
  NormPtr spec = make_lp_norm(2, kInf);
  // The square's vertices witness that such a configuration exists.
  std::vector<Vector> square(4, Vector::Zero(2));
  square[1] << 1.0, 0.0;
  square[2] << 0.0, 1.0;
  square[3] << 1.0, 1.0;
  EquilateralReport witness =
      verify_equilateral(spec, make_point_set(square), 1e-12);
  CHECK(witness.equilateral);
  SearchResult r = search_equilateral(spec, 4, 2, 7);
  double residual = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double gap =
          norm_eval(spec, r.points.points[i] - r.points.points[j]) - 1.0;
      residual += gap * gap;
    }
  CHECK(residual < 1e-10);
}

TEST_CASE("petty certificates separate every basis pair") {
  NormPtr spec = make_lp_norm(3, 1.0);
  PointSet s = standard_basis_set(3);
  AntipodalCertificate cert = petty_certificate(spec, s);
  CHECK(cert.d == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cert.c2 == 1.0);
  CHECK(cert.c1 == doctest::Approx(1.0).epsilon(1e-12));
  const PairCertificate& pc = cert.pair(0, 1, 3);
  CHECK(pc.margin == doctest::Approx(2.0).epsilon(1e-12));
  // Every point evaluates between the two hyperplanes.
  for (int k = 0; k < 3; ++k) {
    double v = pc.f(s.points[k]);
    CHECK(v >= pc.f(s.points[0]) - 1e-12);
    CHECK(v <= pc.f(s.points[1]) + 1e-12);
  }
  CertificateAudit audit = verify_certificate(spec, s, cert);
  CHECK(audit.ok);
}

TEST_CASE("a two-point set certifies with separation equal to its distance") {
  std::vector<Vector> pts(2, Vector::Zero(2));
  pts[1] << 3.0, 4.0;
  PointSet s = make_point_set(pts);
  NormPtr spec = make_lp_norm(2, 2.0);
  AntipodalCertificate cert = petty_certificate(spec, s);
  CHECK(cert.d == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(cert.pairs.size() == 2);
}

TEST_CASE("fixed-point output feeds straight into a unit-separation certificate") {
  NormPtr spec = make_max_norm(
      {make_scaled_norm(2.0 / 3.0, make_lp_norm(6, kInf)),
       make_scaled_norm(1.0 / std::sqrt(6.0), make_lp_norm(6, 2.0))});
  FixedPointRun run = find_equilateral_c0(spec, 6, 1e-12, 2000);
  REQUIRE(run.state.status == FixedPointStatus::converged);
  AntipodalCertificate cert = petty_certificate(spec, run.points, 1e-6);
  CHECK(std::abs(cert.d - 1.0) <= 1e-6);
  CertificateAudit audit = verify_certificate(spec, run.points, cert);
  CHECK(audit.ok);
}

TEST_CASE("non-equilateral input is rejected by the certificate builder") {
  std::vector<Vector> pts(3, Vector::Zero(2));
  pts[1] << 1.0, 0.0;
  pts[2] << 5.0, 0.1;
  CHECK_THROWS_AS(petty_certificate(make_lp_norm(2, 2.0), make_point_set(pts)),
                  invalid_input_error);
}

TEST_CASE("search ties and restarts are deterministic") {
  NormPtr spec = make_lp_norm(2, 2.0);
  SearchResult a = search_equilateral(spec, 3, 2, 1234);
  SearchResult b = search_equilateral(spec, 3, 2, 1234);
  CHECK(a.winning_seed == b.winning_seed);
  for (int i = 0; i < 3; ++i)
    CHECK((a.points.points[i] - b.points.points[i]).cwiseAbs().maxCoeff() ==
          0.0);
}
