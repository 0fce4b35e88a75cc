// Serial reference vs OpenMP kernels. Thread count follows RUNSYM_THREADS.

#include <benchmark/benchmark.h>

#include "runsym/cyclotomic.hpp"
#include "runsym/nsym.hpp"
#include "runsym/oracles.hpp"
#include "runsym/parallel.hpp"

namespace {

using namespace runsym;

const RunPredicate kPred = RunPredicate::residue(4, {0, 1});

void BM_PermsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_perms_enumerate_serial(state.range(0), kPred));
}
void BM_PermsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_perms_enumerate(state.range(0), kPred));
}
BENCHMARK(BM_PermsSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermsParallel)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

void BM_WordsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_words_exhaustive_serial(state.range(0), 3, kPred));
}
void BM_WordsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_words_exhaustive(state.range(0), 3, kPred));
}
BENCHMARK(BM_WordsSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WordsParallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

NSymElement inverse_series(std::size_t order) {
  return h_series_inverse(h_series_from_polynomial(IntPolynomial{1, -1, 1, -1}, order), order);
}

void BM_RibbonSerial(benchmark::State& state) {
  const auto f = inverse_series(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_to_ribbon_serial(f));
}
void BM_RibbonParallel(benchmark::State& state) {
  const auto f = inverse_series(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_to_ribbon(f));
}
BENCHMARK(BM_RibbonSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RibbonParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_zero_one_products_serial(state.range(0)));
}
void BM_SearchParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_zero_one_products(state.range(0)));
}
BENCHMARK(BM_SearchSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  runsym::configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
