#include <benchmark/benchmark.h>

#include "hilbzeta/axes.hpp"
#include "hilbzeta/hilb_enum.hpp"
#include "hilbzeta/zeta_assembly.hpp"

using namespace hilbzeta;

static void BM_Enumerate(benchmark::State& state, const char* germ) {
  const auto pres = parse_presentation(germ);
  const auto inv = invariants(pres);
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto d_max = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(pres, inv, q, d_max));
}
BENCHMARK_CAPTURE(BM_Enumerate, node, "node")->Args({2, 6})->Args({3, 6})->Args({5, 6});
BENCHMARK_CAPTURE(BM_Enumerate, axes3, "axes:3")->Args({2, 4})->Args({3, 4});
BENCHMARK_CAPTURE(BM_Enumerate, semigroup34, "semigroup:3,4")->Args({2, 9})->Args({3, 9});

static void BM_Stabilization(benchmark::State& state) {
  const auto pres = parse_presentation("semigroup:3,4");
  for (auto _ : state) benchmark::DoNotOptimize(verify_stabilization(pres, 3, 9));
}
BENCHMARK(BM_Stabilization);

static void BM_GaussBinomial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_binomial(n, n / 2));
}
BENCHMARK(BM_GaussBinomial)->Arg(8)->Arg(16)->Arg(32);

static void BM_SeriesExpand(benchmark::State& state) {
  const auto z = axes_zeta(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_expand(z, 64));
}
BENCHMARK(BM_SeriesExpand)->Arg(2)->Arg(4)->Arg(8);

static void BM_InterpolateNode(benchmark::State& state) {
  const auto pres = parse_presentation("node");
  for (auto _ : state) benchmark::DoNotOptimize(punctual_zeta_L(pres, {2, 3, 5}));
}
BENCHMARK(BM_InterpolateNode);

BENCHMARK_MAIN();
