// Microbenchmarks for the hot paths: spectral primitives, one solver
// iteration of each kind, a full evolution step, and the rearrangement
// kernels. Run ./lwsw_bench; filter with --benchmark_filter=<regex>.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "lwsw/dynamics.hpp"
#include "lwsw/fixed_point.hpp"
#include "lwsw/model.hpp"
#include "lwsw/properties.hpp"
#include "lwsw/rearrangement.hpp"
#include "lwsw/spectral_grid.hpp"
#include "lwsw/variational.hpp"

namespace {

using namespace lwsw;

ModelParams reference_params() {
  ModelParams p;
  p.alpha = {2.0};
  p.beta = 1.0;
  p.gamma = 1.0;
  p.tau = 0.0;
  p.c = 1.0;
  p.omega = 1.25;
  return p;
}

RealField sech2_field(const GridPtr& g, double amplitude, double k) {
  RealField f(g);
  for (std::size_t i = 0; i < g->size(); ++i) {
    const double c = std::cosh(k * g->point(i));
    f[i] = amplitude / (c * c);
  }
  return f;
}

ProfileSet reference_profile(const GridPtr& g) {
  ProfileSet t = ProfileSet::zero(reference_params(), g);
  t.phi[0] = sech2_field(g, std::sqrt(27.0 / 32.0), 0.5);
  t.psi = sech2_field(g, 0.75, 0.5);
  return t;
}

RealField random_nonnegative(const GridPtr& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  RealField f(g);
  for (auto& x : f.values) x = unif(rng);
  return f;
}

void bm_derivative(benchmark::State& state) {
  auto g = make_grid(40.0, std::size_t(state.range(0)));
  const RealField f = sech2_field(g, 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(derivative(f, 2));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_derivative)->Arg(1024)->Arg(4096);

void bm_helmholtz_inverse(benchmark::State& state) {
  auto g = make_grid(40.0, std::size_t(state.range(0)));
  const RealField f = sech2_field(g, 1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(helmholtz_inverse(f, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_helmholtz_inverse)->Arg(1024)->Arg(4096);

void bm_weinstein_quotient(benchmark::State& state) {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = reference_profile(g);
  for (auto _ : state) benchmark::DoNotOptimize(weinstein_Lambda(t));
}
BENCHMARK(bm_weinstein_quotient);

void bm_preconditioner(benchmark::State& state) {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = reference_profile(g);
  for (auto _ : state) benchmark::DoNotOptimize(apply_L_inverse(t));
}
BENCHMARK(bm_preconditioner);

void bm_fixed_point_iterate(benchmark::State& state) {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = gaussian_initial(reference_params(), g, 1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(petviashvili_iterate_once(t, 2.0));
}
BENCHMARK(bm_fixed_point_iterate);

void bm_fixed_point_solve(benchmark::State& state) {
  auto g = make_grid(40.0, 1024);
  const ModelParams p = reference_params();
  for (auto _ : state) benchmark::DoNotOptimize(petviashvili_solve(p, g));
}
BENCHMARK(bm_fixed_point_solve);

void bm_quotient_minimize(benchmark::State& state) {
  auto g = make_grid(40.0, 1024);
  const ModelParams p = reference_params();
  for (auto _ : state) benchmark::DoNotOptimize(weinstein_minimize(p, g));
}
BENCHMARK(bm_quotient_minimize);

void bm_property_suite(benchmark::State& state) {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = reference_profile(g);
  for (auto _ : state) benchmark::DoNotOptimize(run_property_suite(t));
}
BENCHMARK(bm_property_suite);

void bm_evolution_step(benchmark::State& state) {
  auto g = make_grid(40.0, std::size_t(state.range(0)));
  WaveState s = embed_profile(reference_profile(g));
  for (auto _ : state) {
    s = step(std::move(s), 1e-3);
    benchmark::DoNotOptimize(s.v[0]);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_evolution_step)->Arg(1024)->Arg(4096);

void bm_rearrange(benchmark::State& state) {
  auto g = make_grid(40.0, std::size_t(state.range(0)));
  const NonnegativeField f(random_nonnegative(g, 7));
  for (auto _ : state) benchmark::DoNotOptimize(rearrange(f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_rearrange)->Arg(1024)->Arg(16384);

void bm_riesz_check(benchmark::State& state) {
  auto g = make_grid(10.0, 256);
  const NonnegativeField f(random_nonnegative(g, 1));
  const NonnegativeField q(random_nonnegative(g, 2));
  const NonnegativeField k(random_nonnegative(g, 3));
  for (auto _ : state) benchmark::DoNotOptimize(riesz_check(f, q, k));
}
BENCHMARK(bm_riesz_check);

}  // namespace

BENCHMARK_MAIN();
