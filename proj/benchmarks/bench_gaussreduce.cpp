#include <benchmark/benchmark.h>

#include "gaussreduce/elements.hpp"
#include "gaussreduce/gaussian_state.hpp"
#include "gaussreduce/reduction.hpp"
#include "gaussreduce/synthesis.hpp"

using namespace gaussreduce;

static void BM_Compose(benchmark::State& state) {
  int n = (int)state.range(0);
  GaussianTransform a = random_transform(n, 1.5, 1);
  GaussianTransform b = random_transform(n, 1.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(2, 32);

static void BM_Validate(benchmark::State& state) {
  int n = (int)state.range(0);
  GaussianTransform t = random_transform(n, 1.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(validate(t));
}
BENCHMARK(BM_Validate)->RangeMultiplier(2)->Range(2, 32);

static void BM_Reduce(benchmark::State& state) {
  int n = (int)state.range(0);
  GaussianTransform t = random_transform(n, 1.5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(t));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(2)->Range(2, 32);

static void BM_SqueezeSpectrum(benchmark::State& state) {
  int n = (int)state.range(0);
  GaussianTransform t = random_transform(n, 1.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(squeeze_spectrum(t));
}
BENCHMARK(BM_SqueezeSpectrum)->RangeMultiplier(2)->Range(2, 32);

static void BM_Synthesize(benchmark::State& state) {
  int n = (int)state.range(0);
  // a zero-squeezing draw leaves a pure mesh: A is the unitary to factor
  ComplexMatrix u = random_transform(n, 0.0, 6).A;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(u));
}
BENCHMARK(BM_Synthesize)->RangeMultiplier(2)->Range(2, 32);

static void BM_FullCircuit(benchmark::State& state) {
  int n = (int)state.range(0);
  BlochMessiahForm form = reduce(random_transform(n, 1.5, 7));
  for (auto _ : state) benchmark::DoNotOptimize(full_circuit(form));
}
BENCHMARK(BM_FullCircuit)->RangeMultiplier(2)->Range(2, 32);

static void BM_Compile(benchmark::State& state) {
  int n = (int)state.range(0);
  Circuit c = full_circuit(reduce(random_transform(n, 1.5, 8)));
  for (auto _ : state) benchmark::DoNotOptimize(compile(c));
}
BENCHMARK(BM_Compile)->RangeMultiplier(2)->Range(2, 32);

static void BM_FockAmplitudes(benchmark::State& state) {
  int cutoff = (int)state.range(0);
  PureGaussianState s = evolve_vacuum(random_transform(4, 0.8, 9));
  for (auto _ : state) benchmark::DoNotOptimize(fock_amplitudes(s, cutoff));
}
BENCHMARK(BM_FockAmplitudes)->DenseRange(2, 8, 2);

static void BM_ConditionSinglePhoton(benchmark::State& state) {
  PureGaussianState s = evolve_vacuum(random_transform((int)state.range(0), 0.8, 10));
  for (auto _ : state)
    benchmark::DoNotOptimize(condition_single_photon(s, 0, {1}));
}
BENCHMARK(BM_ConditionSinglePhoton)->RangeMultiplier(2)->Range(4, 16);

BENCHMARK_MAIN();
