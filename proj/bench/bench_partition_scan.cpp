// Serial vs OpenMP partition scan on Haar-random states, where no cut
// factors and every candidate gets evaluated.
#include <benchmark/benchmark.h>

#include "graphsep/factorize.hpp"
#include "graphsep/laplacian.hpp"
#include "graphsep/oracle.hpp"

namespace {

using namespace graphsep;

WeightedGraph haar_graph(int parts) {
  return graph_of(oracle::pure_density(oracle::random_pure(Dims(parts, 2), 7)));
}

void BM_ScanSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto g = haar_graph(m);
  const auto candidates = scan_candidates(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(scan_serial(g, candidates));
  state.counters["cuts"] = static_cast<double>(candidates.size());
}

void BM_ScanParallel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto g = haar_graph(m);
  const auto candidates = scan_candidates(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(scan_parallel(g, candidates));
  state.counters["cuts"] = static_cast<double>(candidates.size());
}

void BM_AllCuts(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto g = haar_graph(m);
  const auto cuts = all_bipartitions(m);
  for (auto _ : state) benchmark::DoNotOptimize(criterion_at_all(g, cuts));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllCuts)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
