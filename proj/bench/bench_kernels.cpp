// Serial reference vs OpenMP for the two hot kernels. Arg(0) is serial,
// Arg(1) parallel.

#include <benchmark/benchmark.h>

#include <map>

#include "pf/enumerate.hpp"
#include "pf/invariants.hpp"

namespace {

const std::vector<pf::Graph>& corpus(int n) {
  static std::map<int, std::vector<pf::Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, pf::enumerate_order(n)).first;
  return it->second;
}

pf::Exec exec_of(const benchmark::State& s) { return s.range(0) ? pf::Exec::parallel : pf::Exec::serial; }

void BM_augment_7_to_8(benchmark::State& state) {
  const auto& parents = corpus(7);
  for (auto _ : state) benchmark::DoNotOptimize(pf::augment(parents, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parents.size()));
}

void BM_column(benchmark::State& state, const char* id) {
  const auto& graphs = corpus(8);
  for (auto _ : state) benchmark::DoNotOptimize(pf::evaluate_column(id, graphs, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

}  // namespace

BENCHMARK(BM_augment_7_to_8)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_column, chromatic_number, "chromatic_number")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_column, nonequiv_colorings, "nonequiv_colorings")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_column, eccentric_connectivity_index, "eccentric_connectivity_index")
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_column, matching_count, "matching_count")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
