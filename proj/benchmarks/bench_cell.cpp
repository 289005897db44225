#include <benchmark/benchmark.h>

#include "hbcell/cell.hpp"

namespace {

const hbcell::MonomialCell kWide = hbcell::make_cell({0, 3, 4, 5, 10, 11, 12, 14, 15, 16, 19, 20, 21});

void BM_HilbertFunction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hbcell::hilbert_function(kWide));
}
BENCHMARK(BM_HilbertFunction);

void BM_Dimension(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hbcell::dimension(kWide));
}
BENCHMARK(BM_Dimension);

void BM_EnumerateLexCells(benchmark::State& state) {
  for (auto _ : state) {
    auto cells = hbcell::enumerate_lex_cells(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(cells.data());
  }
}
BENCHMARK(BM_EnumerateLexCells)->DenseRange(10, 30, 10);

}  // namespace

BENCHMARK_MAIN();
