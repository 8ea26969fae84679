#include <benchmark/benchmark.h>

#include "ctube/cluster.hpp"
#include "ctube/tube.hpp"
#include "ctube/verify.hpp"

namespace {

ctube::Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? ctube::Execution::serial : ctube::Execution::parallel;
}

void BM_SeedBfs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s0 = ctube::initial_seed(ctube::exchange_matrix(ctube::initial_maximal_rigid(n)));
  for (auto _ : state) {
    auto g = ctube::enumerate_exchange_graph(s0, ctube::kDefaultNodeLimit, mode(state));
    benchmark::DoNotOptimize(g.nodes.size());
  }
}

void BM_MutationRelations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = ctube::check_mutation_relations(n, mode(state));
    benchmark::DoNotOptimize(r.checks.size());
  }
}

void BM_ClusterStructure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = ctube::check_cluster_structure(n, mode(state));
    benchmark::DoNotOptimize(r.checks.size());
  }
}

}  // namespace

// second argument: 0 serial, 1 OpenMP
BENCHMARK(BM_SeedBfs)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MutationRelations)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusterStructure)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
