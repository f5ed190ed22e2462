#include <benchmark/benchmark.h>

#include "nlsa/norms.hpp"
#include "nlsa/random_field.hpp"
#include "nlsa/solver.hpp"
#include "nlsa/spectral.hpp"

namespace {

using namespace nlsa;

GridPtr bench_grid(std::int64_t n) {
  return make_grid(static_cast<std::size_t>(n), 50.0);
}

void BM_ForwardDft(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  const auto u = random_field(grid, 1, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_dft(u));
  }
}
BENCHMARK(BM_ForwardDft)->Arg(256)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_HalfDerivative(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  const auto u = random_field(grid, 2, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(half_derivative(u));
  }
}
BENCHMARK(BM_HalfDerivative)->Arg(256)->Arg(4096);

void BM_StrangStep(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  SolverParams params;
  params.gamma = 1.0;
  params.forcing = random_field(grid, 3, 0.5);
  params.dt = 1e-3;
  params.t_final = 1.0;
  ComplexField u = random_field(grid, 4, 1.0);
  for (auto _ : state) {
    u = strang_step(u, params);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_StrangStep)->Arg(256)->Arg(1024)->Arg(4096);

void BM_IntegrateUnitTime(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  SolverParams params;
  params.gamma = 1.0;
  params.forcing = random_field(grid, 5, 0.5);
  params.dt = 1e-3;
  params.t_final = 1.0;
  params.record_every = 100;
  const auto u0 = random_field(grid, 6, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(u0, params));
  }
}
BENCHMARK(BM_IntegrateUnitTime)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_MixedNorm(benchmark::State& state) {
  const auto grid = bench_grid(state.range(0));
  SpaceTimeField traj;
  traj.grid = grid;
  traj.dt_sample = 1e-2;
  for (int i = 0; i < 100; ++i) traj.frames.push_back(random_field(grid, 10 + i, 1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_linf_x_l2_t(traj));
  }
}
BENCHMARK(BM_MixedNorm)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
