#include <doctest.h>

#include <cmath>
#include <vector>

#include "equinorm/norm.hpp"
#include "equinorm/rng.hpp"

using namespace equinorm;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Exhaustive reference: max over all index sets F of size m of the model
// norm restricted to F, combined with the scaled base norm.
double spreading_by_enumeration(const NormPtr& base, const NormPtr& model,
                                int m, double eps, const Vector& alpha) {
  const int dim = int(alpha.size());
  double best = norm_eval(base, alpha) / (1.0 + eps);
  std::vector<int> index(m);
  for (int i = 0; i < m; ++i) index[i] = i;
  while (true) {
    Vector restricted = Vector::Zero(dim);
    for (int i : index) restricted[i] = alpha[i];
    best = std::max(best, norm_eval(model, restricted));
    int k = m - 1;
    while (k >= 0 && index[k] == dim - m + k) --k;
    if (k < 0) break;
    ++index[k];
    for (int i = k + 1; i < m; ++i) index[i] = index[i - 1] + 1;
  }
  return best;
}

}  // namespace

TEST_CASE("difference of two coordinates evaluates to sqrt(2)") {
  NormPtr base = make_lp_norm(8, 2.0);
  NormPtr spec = make_spreading_composite(base, 0.1, 2, base);
  Vector alpha = Vector::Zero(8);
  alpha[0] = 1.0;
  alpha[1] = -1.0;
  CHECK(norm_eval(spec, alpha) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(norm_eval(spec, alpha) ==
        doctest::Approx(spreading_by_enumeration(base, base, 2, 0.1, alpha))
            .epsilon(1e-13));
}

TEST_CASE("single coordinate evaluates to one") {
  NormPtr base = make_lp_norm(8, 2.0);
  NormPtr spec = make_spreading_composite(base, 0.1, 2, base);
  Vector alpha = Vector::Zero(8);
  alpha[0] = 1.0;
  CHECK(norm_eval(spec, alpha) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(norm_eval(spec, alpha) ==
        doctest::Approx(spreading_by_enumeration(base, base, 2, 0.1, alpha))
            .epsilon(1e-13));
}

TEST_CASE("coordinate differences are constant across all pairs") {
  NormPtr base = make_lp_norm(8, 2.0);
  NormPtr spec = make_spreading_composite(base, 0.1, 2, base);
  double first = -1.0;
  int n_pairs = 0;
  for (int n = 0; n < 8; ++n)
    for (int m = n + 1; m < 8; ++m) {
      Vector alpha = Vector::Zero(8);
      alpha[n] = 1.0;
      alpha[m] = -1.0;
      double v = norm_eval(spec, alpha);
      if (first < 0) first = v;
      CHECK(std::abs(v - first) <= 1e-12);
      ++n_pairs;
    }
  CHECK(n_pairs == 28);
}

TEST_CASE("sign flips do not change coordinate-pair values") {
  NormPtr base = make_lp_norm(8, 2.0);
  NormPtr spec = make_spreading_composite(base, 0.1, 2, base);
  Vector diff = Vector::Zero(8), sum = Vector::Zero(8);
  diff[2] = 1.0;
  diff[5] = -1.0;
  sum[2] = 1.0;
  sum[5] = 1.0;
  CHECK(norm_eval(spec, diff) ==
        doctest::Approx(norm_eval(spec, sum)).epsilon(1e-14));
}

TEST_CASE("values depend only on magnitudes and not on placement") {
  NormPtr base = make_lp_norm(8, 2.0);
  NormPtr spec = make_spreading_composite(base, 0.1, 2, base);
  Vector a = Vector::Zero(8), b = Vector::Zero(8);
  a[0] = 0.7;
  a[1] = -0.3;
  b[2] = 0.7;
  b[6] = 0.3;
  CHECK(norm_eval(spec, a) == doctest::Approx(norm_eval(spec, b)).epsilon(1e-14));
}

TEST_CASE("order-statistics path matches exhaustive enumeration on random input") {
  NormPtr base = make_lp_norm(7, 2.0);
  NormPtr model = make_lp_norm(7, kInf);
  NormPtr spec = make_spreading_composite(base, 0.25, 3, model);
  Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    Vector alpha = rng.normal_vector(7);
    CHECK(norm_eval(spec, alpha) ==
          doctest::Approx(spreading_by_enumeration(base, model, 3, 0.25, alpha))
              .epsilon(1e-12));
  }
}

TEST_CASE("non-lp models require the exhaustive flag") {
  Matrix facets(2, 2);
  facets << 1.0, 0.0, 0.0, 1.0;
  NormPtr model = make_polyhedral_norm(facets);
  NormPtr base = make_lp_norm(2, 2.0);
  CHECK_THROWS_AS(make_spreading_composite(base, 0.1, 2, model),
                  invalid_input_error);
  // With the flag, the polyhedral sup ball matches the lp sup-norm path.
  NormPtr via_poly = make_spreading_composite(base, 0.1, 2, model, true);
  NormPtr via_lp =
      make_spreading_composite(base, 0.1, 2, make_lp_norm(2, kInf));
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    Vector alpha = rng.normal_vector(2);
    CHECK(norm_eval(via_poly, alpha) ==
          doctest::Approx(norm_eval(via_lp, alpha)).epsilon(1e-12));
  }
}

TEST_CASE("window larger than the dimension is rejected") {
  NormPtr base = make_lp_norm(3, 2.0);
  CHECK_THROWS_AS(make_spreading_composite(base, 0.1, 4, base),
                  invalid_input_error);
}
