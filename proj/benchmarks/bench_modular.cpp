#include <benchmark/benchmark.h>

#include "tubelift/elliptic.hpp"
#include "tubelift/jacobi.hpp"
#include "tubelift/lift.hpp"
#include "tubelift/siegel.hpp"

using namespace tubelift;

static void BM_Eigenform(benchmark::State& state) {
  const auto trunc = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(elliptic::eigenform(22, trunc));
}
BENCHMARK(BM_Eigenform)->RangeMultiplier(4)->Range(100, 6400)->Unit(benchmark::kMillisecond);

static void BM_EisensteinExpand(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(siegel::eisenstein_expand(11, state.range(0)));
}
BENCHMARK(BM_EisensteinExpand)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_HeckeDegree2(benchmark::State& state) {
  const auto e = siegel::eisenstein_expand(11, 30);
  for (auto _ : state) benchmark::DoNotOptimize(siegel::hecke_tp_degree2(e, state.range(0)));
}
BENCHMARK(BM_HeckeDegree2)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Fresh cache each iteration, so interpolation cost is included.
static void BM_LocalPolynomial(benchmark::State& state) {
  const lift::LocalKey key{2, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1, -1};
  for (auto _ : state) {
    lift::LocalPolynomialCache cache;
    benchmark::DoNotOptimize(lift::compute_local_polynomial(key, cache));
  }
}
BENCHMARK(BM_LocalPolynomial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_LiftExpand(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  const auto f = elliptic::eigenform(18, static_cast<std::size_t>(lift::required_truncation(bound)));
  for (auto _ : state) {
    lift::LocalPolynomialCache cache;
    benchmark::DoNotOptimize(lift::lift_expand(f, bound, cache));
  }
}
BENCHMARK(BM_LiftExpand)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_ThetaReconstruction(benchmark::State& state) {
  const auto e = siegel::eisenstein_expand(11, 30);
  const jacobi::JacobiIndex s(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi::reconstruct_fj(e, s));
}
BENCHMARK(BM_ThetaReconstruction)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
