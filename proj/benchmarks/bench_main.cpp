#include <benchmark/benchmark.h>

#include "jantzenlab/affine_weyl.hpp"
#include "jantzenlab/fock.hpp"
#include "jantzenlab/jantzen.hpp"
#include "jantzenlab/kl.hpp"
#include "jantzenlab/poly_matrix.hpp"

using namespace jantzenlab;

static void BM_FockCanonicalBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_basis_plus(n, 3));
}
BENCHMARK(BM_FockCanonicalBasis)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_KLDecompositionMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_bruhat_cache();
    benchmark::DoNotOptimize(d_matrix_kl(n, 3));
  }
}
BENCHMARK(BM_KLDecompositionMatrix)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_JantzenDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  JantzenOptions opts;
  opts.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(graded_decomposition(n, 3, opts));
}
BENCHMARK(BM_JantzenDecomposition)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_GramBlock(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gram_block(Partition{3, 2}, Composition{1, 1, 1, 1, 1}, 3));
}
BENCHMARK(BM_GramBlock)->Unit(benchmark::kMillisecond);

static void BM_ElementaryDivisors(benchmark::State& state) {
  const GramBlock block = gram_block(Partition{3, 2}, Composition{1, 1, 1, 1, 1}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(elementary_divisor_vals(block.matrix));
}
BENCHMARK(BM_ElementaryDivisors)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
