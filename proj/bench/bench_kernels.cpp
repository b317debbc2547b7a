// Serial reference vs OpenMP kernel, pairwise. Run with OMP_NUM_THREADS set to compare.
#include <benchmark/benchmark.h>

#include "expmath/diagmat/diagmat.hpp"
#include "expmath/linalg/permanent.hpp"
#include "expmath/queens/queens.hpp"
#include "expmath/quicksort/quicksort.hpp"
#include "expmath/spanning/grid.hpp"

using namespace expmath;

namespace {

Matrix<Integer> bench_matrix(std::size_t n) {
  Matrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Integer(static_cast<long>((i * 7 + j * 3) % 5) - 2);
  return m;
}

const std::vector<Rational> kRow{Rational(2), Rational(3)}, kCol{Rational(2), Rational(4), Rational(5)};

void BM_permanent_serial(benchmark::State& st) {
  auto m = bench_matrix(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(permanent_serial(m));
}
void BM_permanent_parallel(benchmark::State& st) {
  auto m = bench_matrix(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_permanent_serial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_permanent_parallel)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_spanning_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(spanning::spanning_counts_serial(4, 1, 24));
}
void BM_spanning_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(spanning::spanning_counts(4, 1, 24));
}
BENCHMARK(BM_spanning_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spanning_parallel)->Unit(benchmark::kMillisecond);

void BM_det_sequence_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(diagmat::det_sequence_serial(kRow, kCol, 1, 60));
}
void BM_det_sequence_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(diagmat::det_sequence(kRow, kCol, 1, 60));
}
BENCHMARK(BM_det_sequence_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_det_sequence_parallel)->Unit(benchmark::kMillisecond);

void BM_mc_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(quicksort::mc_run_serial({200, 3, 20000, 1}));
}
void BM_mc_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(quicksort::mc_run({200, 3, 20000, 1}));
}
BENCHMARK(BM_mc_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_parallel)->Unit(benchmark::kMillisecond);

void BM_exhaustive_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(queens::exhaustive_small_serial(5));
}
void BM_exhaustive_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(queens::exhaustive_small(5));
}
BENCHMARK(BM_exhaustive_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exhaustive_parallel)->Unit(benchmark::kMillisecond);

void BM_optimize_serial(benchmark::State& st) {
  queens::OptimizeOptions o;
  o.starts = 8;
  for (auto _ : st) benchmark::DoNotOptimize(queens::optimize_serial(queens::Family::TwoSquares, o));
}
void BM_optimize_parallel(benchmark::State& st) {
  queens::OptimizeOptions o;
  o.starts = 8;
  for (auto _ : st) benchmark::DoNotOptimize(queens::optimize(queens::Family::TwoSquares, o));
}
BENCHMARK(BM_optimize_serial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_optimize_parallel)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
