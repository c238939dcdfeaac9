#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>
#include <vector>

#include "equinorm/antipodal.hpp"
#include "equinorm/fixedpoint.hpp"
#include "equinorm/linprog.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"
#include "equinorm/rng.hpp"

using namespace equinorm;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

NormPtr make_variant(const std::string& name, int dim) {
  if (name == "lp2") return make_lp_norm(dim, 2.0);
  if (name == "lp1") return make_lp_norm(dim, 1.0);
  if (name == "sup") return make_lp_norm(dim, kInf);
  if (name == "mixed")
    return make_max_norm(
        {make_scaled_norm(2.0 / 3.0, make_lp_norm(dim, kInf)),
         make_scaled_norm(1.0 / std::sqrt(double(dim)), make_lp_norm(dim, 2.0))});
  throw invalid_input_error("unknown benchmark variant " + name);
}

std::vector<Vector> sample_vectors(int dim, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(rng.normal_vector(dim));
  return out;
}

void bench_norm_eval(benchmark::State& state, const std::string& name) {
  const int dim = static_cast<int>(state.range(0));
  NormPtr spec = make_variant(name, dim);
  std::vector<Vector> vs = sample_vectors(dim, 64, 17);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(norm_eval(spec, vs[k % vs.size()]));
    ++k;
  }
}

void bench_dual_eval(benchmark::State& state, const std::string& name) {
  const int dim = static_cast<int>(state.range(0));
  NormPtr spec = make_variant(name, dim);
  std::vector<Vector> vs = sample_vectors(dim, 64, 18);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_norm_eval(spec, vs[k % vs.size()]));
    ++k;
  }
}

void bench_hull_gauge(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(23);
  std::vector<Vector> gens;
  for (int i = 0; i < 2 * dim; ++i) gens.push_back(rng.normal_vector(dim));
  NormPtr hull = make_hull_gauge(make_lp_norm(dim, 2.0), gens, 0.8);
  std::vector<Vector> vs = sample_vectors(dim, 64, 19);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(norm_eval(hull, vs[k % vs.size()]));
    ++k;
  }
}

void bench_solve_lp(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(29);
  LinearProgram lp;
  lp.objective = rng.normal_vector(dim);
  lp.ineq_lhs = Matrix(2 * dim + 4, dim);
  lp.ineq_rhs = Vector(2 * dim + 4);
  for (int r = 0; r < 4; ++r) {
    lp.ineq_lhs.row(r) = rng.normal_vector(dim).transpose();
    lp.ineq_rhs(r) = rng.uniform(0.5, 2.0);
  }
  for (int i = 0; i < dim; ++i) {
    lp.ineq_lhs.row(4 + 2 * i).setZero();
    lp.ineq_lhs(4 + 2 * i, i) = 1.0;
    lp.ineq_rhs(4 + 2 * i) = 10.0;
    lp.ineq_lhs.row(5 + 2 * i).setZero();
    lp.ineq_lhs(5 + 2 * i, i) = -1.0;
    lp.ineq_rhs(5 + 2 * i) = 10.0;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(lp));
  }
}

void bench_phi_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NormPtr spec = make_variant("mixed", n);
  Rng rng(31);
  Vector eps = rng.uniform_vector(pair_count(n), 0.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_step(spec, eps, n));
  }
}

void bench_certify_pair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PointSet cube = hypercube_vertices(n);
  NormPtr spec = make_lp_norm(n, kInf);
  CertifyOptions options;
  options.parallel = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_antipodal(spec, cube, 1.0, options));
  }
}

}  // namespace

BENCHMARK_CAPTURE(bench_norm_eval, lp2, "lp2")->Arg(8)->Arg(64);
BENCHMARK_CAPTURE(bench_norm_eval, lp1, "lp1")->Arg(8)->Arg(64);
BENCHMARK_CAPTURE(bench_norm_eval, sup, "sup")->Arg(8)->Arg(64);
BENCHMARK_CAPTURE(bench_norm_eval, mixed, "mixed")->Arg(8)->Arg(64);
BENCHMARK_CAPTURE(bench_dual_eval, lp2, "lp2")->Arg(8)->Arg(64);
BENCHMARK_CAPTURE(bench_dual_eval, mixed, "mixed")->Arg(8)->Arg(64);
BENCHMARK(bench_hull_gauge)->Arg(2)->Arg(6);
BENCHMARK(bench_solve_lp)->Arg(4)->Arg(12);
BENCHMARK(bench_phi_step)->Arg(8)->Arg(16);
BENCHMARK(bench_certify_pair)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
