#include <benchmark/benchmark.h>

#include "rammscatter/inversion.hpp"
#include "rammscatter/ls_grid.hpp"
#include "rammscatter/radial.hpp"
#include "rammscatter/specfun.hpp"

using namespace ramm;

static void BM_SphHarmAll(benchmark::State& state) {
  int L = static_cast<int>(state.range(0));
  CVec3 d(cd(0.3, 0.0), cd(0.2, 0.1), cd(0.8, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(sph_harm_all(L, d));
}
BENCHMARK(BM_SphHarmAll)->Arg(10)->Arg(20)->Arg(40);

static void BM_RadialSolve(benchmark::State& state) {
  Potential q = Potential::ball(2.0, 1.0);
  int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_radial(q, L));
}
BENCHMARK(BM_RadialSolve)->Arg(8)->Arg(16);

static void BM_GridSolve(benchmark::State& state) {
  Potential q = Potential::ball(1.0, 1.0);
  int n = static_cast<int>(state.range(0));
  Vec3 alpha(0.0, 0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_ls_grid(q, alpha, n));
}
BENCHMARK(BM_GridSolve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_FitMollifier(benchmark::State& state) {
  Potential q = Potential::ball(1.0, 1.0);
  FarField ff = farfield_radial(q, 12);
  DirectionPair pair = pair_for_norm(Vec3(1.0, 0.0, 0.0), 3.0);
  AnnulusSpec spec;
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_mollifier(ff, pair, spec, 1e-10));
}
BENCHMARK(BM_FitMollifier)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
