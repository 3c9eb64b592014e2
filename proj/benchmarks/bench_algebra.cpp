#include <benchmark/benchmark.h>

#include <random>

#include "tubelift/lfactor.hpp"
#include "tubelift/octonion.hpp"

using namespace tubelift;

namespace {

jordan::Octonion random_octonion(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  std::array<Rational, 8> c;
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return jordan::Octonion(c);
}

}  // namespace

static void BM_OctonionProduct(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto x = random_octonion(rng), y = random_octonion(rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_OctonionProduct);

static void BM_JordanDeterminant(benchmark::State& state) {
  std::mt19937 rng(2);
  const jordan::JordanElement v{3, make_rational(1, 2), 7, random_octonion(rng), random_octonion(rng), random_octonion(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(jordan::jordan_det(v));
}
BENCHMARK(BM_JordanDeterminant);

static void BM_StandardFactor(benchmark::State& state) {
  const auto g = static_cast<lfactor::Group>(state.range(0));
  const int n = g == lfactor::Group::kE73 ? 0 : 3;
  for (auto _ : state) benchmark::DoNotOptimize(lfactor::standard_factor_check(g, n));
  state.SetLabel(lfactor::group_name(g));
}
BENCHMARK(BM_StandardFactor)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
