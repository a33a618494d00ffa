#include <benchmark/benchmark.h>

#include "twoalg/curve.hpp"
#include "twoalg/dcat.hpp"
#include "twoalg/homology.hpp"
#include "twoalg/ralgebra.hpp"
#include "twoalg/twist.hpp"

using namespace twoalg;

static void BM_build_R_green(benchmark::State& state) {
  auto f = green_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_R(f).dim());
}
BENCHMARK(BM_build_R_green)->DenseRange(3, 8);

static void BM_oracle_kk(benchmark::State& state) {
  auto f = kk_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_against_oracle(f, -1).agree);
}
BENCHMARK(BM_oracle_kk)->DenseRange(1, 3);

static void BM_gldim_green(benchmark::State& state) {
  auto f = green_family(static_cast<int>(state.range(0)));
  auto a = build_R(f).algebra();
  for (auto _ : state) benchmark::DoNotOptimize(gldim(a, default_gldim_cutoff(f)).gldim);
}
BENCHMARK(BM_gldim_green)->DenseRange(3, 7);

static void BM_factorize_random(benchmark::State& state) {
  auto f = random_family(3, static_cast<int>(state.range(0)), std::vector<int>(state.range(0), 1), 7);
  for (auto _ : state) benchmark::DoNotOptimize(factorize_R(f).passed);
}
BENCHMARK(BM_factorize_random)->DenseRange(1, 4);

static void BM_dcat_endomorphisms(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  auto d = build_D(random_family(2, m, std::vector<int>(m, 1), 3), std::vector<int>(m, 0));
  for (auto _ : state) benchmark::DoNotOptimize(endomorphism_cohomology(d).passed());
}
BENCHMARK(BM_dcat_endomorphisms)->DenseRange(1, 3);

static void BM_curve_report(benchmark::State& state) {
  auto f = random_curve_family(static_cast<int>(state.range(0)), 3 * static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(curve_report(f).consistent);
}
BENCHMARK(BM_curve_report)->RangeMultiplier(2)->Range(2, 16);
BENCHMARK_MAIN();
