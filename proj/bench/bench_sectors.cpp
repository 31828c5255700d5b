// Sector averaging: canonical cyclotomic reference vs group-ring kernel, serial and OpenMP.

#include <benchmark/benchmark.h>

#include "lgvar/commands.hpp"
#include "lgvar/orbifold.hpp"

using namespace lgvar;

namespace {

struct Case {
  WeightSystem w;
  DiagonalGroup g;
};

// untwisted sector of x1^a + ... with the full SL symmetry group, the heaviest sector there is
Case make_case(const std::vector<int>& a) {
  return {brieskorn_pham_weights(a), brieskorn_pham_symmetry_group(a)};
}

const std::vector<std::vector<int>> kCases = {{5, 5, 5}, {4, 6, 6}, {3, 4, 5, 6}};

void BM_Reference(benchmark::State& state) {
  const Case c = make_case(kCases[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(sector_series_reference(c.w, c.g, c.g.elements().front()));
  state.SetLabel("|G|=" + std::to_string(c.g.order()));
}

void BM_FastSerial(benchmark::State& state) {
  const Case c = make_case(kCases[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(sector_series(c.w, c.g, c.g.elements().front(), Execution::Serial));
  state.SetLabel("|G|=" + std::to_string(c.g.order()));
}

void BM_FastParallel(benchmark::State& state) {
  const Case c = make_case(kCases[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(sector_series(c.w, c.g, c.g.elements().front(), Execution::Parallel));
  state.SetLabel("|G|=" + std::to_string(c.g.order()));
}

void BM_FullVerdict(benchmark::State& state) {
  const Case c = make_case(kCases[static_cast<std::size_t>(state.range(0))]);
  const Execution exec = state.range(1) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(c.w, c.g, exec));
}

}  // namespace

BENCHMARK(BM_Reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullVerdict)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
