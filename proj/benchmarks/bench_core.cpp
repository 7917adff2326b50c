#include <benchmark/benchmark.h>

#include "bcx/cyclic.hpp"
#include "bcx/hermitian_eig.hpp"
#include "bcx/spectral.hpp"
#include "bcx/spectral_measure.hpp"
#include "cli/random_instances.hpp"

namespace {

void BM_ScalarMultiply(benchmark::State& state) {
  bcx::cli::RandomInstances rng(1);
  bcx::Bicomplex a = rng.bicomplex();
  const bcx::Bicomplex b = rng.bicomplex();
  for (auto _ : state) {
    a = a * b;
    a = 0.5 * a;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ScalarMultiply);

void BM_MatrixMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  bcx::cli::RandomInstances rng(2);
  const bcx::BCMatrix a = rng.matrix(n), b = rng.matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatrixMultiply)->RangeMultiplier(2)->Range(4, 64);

void BM_Jacobi(benchmark::State& state) {
  bcx::cli::RandomInstances rng(3);
  const bcx::ComplexMatrix a = rng.hermitian(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bcx::hermitian_eig(a));
}
BENCHMARK(BM_Jacobi)->RangeMultiplier(2)->Range(4, 64);

void BM_SpectralDecompose(benchmark::State& state) {
  bcx::cli::RandomInstances rng(4);
  const bcx::BCMatrix t = rng.self_adjoint(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bcx::spectral_decompose(t));
}
BENCHMARK(BM_SpectralDecompose)->RangeMultiplier(2)->Range(4, 64);

void BM_CyclicDirectSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  bcx::cli::RandomInstances rng(5);
  std::vector<double> s1, s2;
  for (std::size_t i = 0; i < n; ++i) {
    s1.push_back(static_cast<double>(i / 2));
    s2.push_back(static_cast<double>(i % 3));
  }
  const bcx::BCMatrix t = rng.self_adjoint_with_spectra(s1, s2);
  for (auto _ : state) benchmark::DoNotOptimize(bcx::cyclic_direct_sum(t));
}
BENCHMARK(BM_CyclicDirectSum)->RangeMultiplier(2)->Range(4, 32);

void BM_CyclicMeasure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  bcx::cli::RandomInstances rng(6);
  const bcx::BCMatrix t = rng.self_adjoint(n);
  const bcx::BCVector w = rng.vector(n);
  for (auto _ : state) benchmark::DoNotOptimize(bcx::unitary_to_l2(t, w));
}
BENCHMARK(BM_CyclicMeasure)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
