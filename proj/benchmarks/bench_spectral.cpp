#include <benchmark/benchmark.h>

#include "cmlab/cayley.hpp"
#include "cmlab/sampler.hpp"
#include "cmlab/spectral.hpp"

namespace {

cmlab::CoupledSample five_points(double gamma2) {
  return cmlab::CoupledSample(
      cmlab::ErgodicParams::validate({0.3, gamma2, {3.0, -2.0, 1.5, 1.0, -0.5}, {}}), 42);
}

void BM_MinorAssembly(benchmark::State& state) {
  const auto s = five_points(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(cmlab::minor(s, state.range(0)));
}
BENCHMARK(BM_MinorAssembly)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_DenseEigenvalues(benchmark::State& state) {
  const auto m = cmlab::minor(five_points(0.0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cmlab::hermitian_eigenvalues(m));
}
BENCHMARK(BM_DenseEigenvalues)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_DenseDecomposition(benchmark::State& state) {
  const auto m = cmlab::minor(five_points(1.0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cmlab::eig_hermitian(m));
}
BENCHMARK(BM_DenseDecomposition)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_LowRankSpectrum(benchmark::State& state) {
  const auto s = five_points(0.0);
  for (auto _ : state) benchmark::DoNotOptimize(cmlab::lowrank_spectrum(s, state.range(0)));
}
BENCHMARK(BM_LowRankSpectrum)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_Cayley(benchmark::State& state) {
  const auto m = cmlab::minor(five_points(1.0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cmlab::cayley(m));
}
BENCHMARK(BM_Cayley)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
