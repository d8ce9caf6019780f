#include <benchmark/benchmark.h>

#include <random>

#include "bgc/generators.hpp"
#include "bgc/torus.hpp"

using namespace bgc;

namespace {

Matrix randomMatrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-4, 4);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(Rational(d(rng)), Rational(d(rng)));
  return m;
}

void BM_Rref(benchmark::State& state) {
  const Matrix m = randomMatrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_ComplexAnalysis(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<DoubleComplex> cs;
  for (int i = 0; i < 16; ++i) cs.push_back(randomComplex(rng).complex);
  for (auto _ : state)
    for (const auto& c : cs) benchmark::DoNotOptimize(checkTheoremEquivalences(c));
}
BENCHMARK(BM_ComplexAnalysis);

void BM_ModeComplex(benchmark::State& state) {
  const FlatGeometry g(fourSpaceModel());
  for (auto _ : state) benchmark::DoNotOptimize(g.modeComplex({1, -1, 2, 0}));
}
BENCHMARK(BM_ModeComplex);

void BM_TorusSweep(benchmark::State& state) {
  const FlatGeometry g(fourSpaceModel());
  for (auto _ : state)
    benchmark::DoNotOptimize(torusCohomology(g, {Theory::BottChern}, Pair::PP, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_TorusSweep)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
