#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "mcx/hilbert.hpp"

namespace {

using namespace mcx;

Multicomplex random_number(int level, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(basis_size(level));
  for (double& c : x) c = u(rng);
  return {level, std::move(x)};
}

McMatrix random_matrix(int level, std::size_t m, std::mt19937_64& rng, bool hermitian) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ComplexMatrix> s;
  for (std::size_t p = 0; p < idempotent_size(level); ++p) {
    ComplexMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = {u(rng), u(rng)};
    if (hermitian) a = a + conjugate_transpose(a);
    s.push_back(a);
  }
  return McMatrix::from_slices(level, s);
}

void BM_ToIdempotent(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Multicomplex x = random_number(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(to_idempotent(x));
  state.SetComplexityN(state.range(0) << state.range(0));
}
BENCHMARK(BM_ToIdempotent)->DenseRange(2, 16, 2)->Complexity(benchmark::oN);

void BM_FromIdempotent(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const IdempotentRep r = to_idempotent(random_number(static_cast<int>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(from_idempotent(r));
}
BENCHMARK(BM_FromIdempotent)->DenseRange(2, 16, 2);

void BM_MulStandard(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  const Multicomplex a = random_number(n, rng), b = random_number(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mul_standard(a, b));
}
BENCHMARK(BM_MulStandard)->DenseRange(2, 10, 2);

// Standard-basis product routed through the idempotent representation.
void BM_MulViaTransform(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const int n = static_cast<int>(state.range(0));
  const Multicomplex a = random_number(n, rng), b = random_number(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(from_idempotent(to_idempotent(a) * to_idempotent(b)));
}
BENCHMARK(BM_MulViaTransform)->DenseRange(2, 10, 2);

void BM_Det(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const McMatrix a = random_matrix(4, static_cast<std::size_t>(state.range(0)), rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Det)->RangeMultiplier(2)->Range(2, 32);

void BM_InvertMatrix(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const McMatrix a = random_matrix(4, static_cast<std::size_t>(state.range(0)), rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(invert_matrix(a));
}
BENCHMARK(BM_InvertMatrix)->RangeMultiplier(2)->Range(2, 32);

void BM_SpectralDecompose(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const McMatrix a = random_matrix(3, static_cast<std::size_t>(state.range(0)), rng, true);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(a));
}
BENCHMARK(BM_SpectralDecompose)->RangeMultiplier(2)->Range(2, 16);

}  // namespace

BENCHMARK_MAIN();
