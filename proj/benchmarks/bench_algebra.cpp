#include <benchmark/benchmark.h>

#include "hbcell/betti.hpp"
#include "hbcell/canonical.hpp"
#include "hbcell/groebner.hpp"
#include "hbcell/projective.hpp"

namespace {

using namespace hbcell;

// Lex-segment cells of growing size, indexed by state.range(0).
MonomialCell cell_for(std::int64_t k) {
  switch (k) {
    case 0: return make_cell({0, 2, 3, 5});
    case 1: return make_cell({0, 5, 7, 11});
    case 2: return make_cell({0, 2, 4, 6, 9});
    default: return make_cell({0, 1, 3, 4, 6, 8});
  }
}

const FieldSpec kField = FieldSpec::prime_field(10007);

void BM_Psi(benchmark::State& state) {
  const ParamMatrix a = sample(cell_for(state.range(0)), kField, 1);
  for (auto _ : state) benchmark::DoNotOptimize(psi(a));
}
BENCHMARK(BM_Psi)->DenseRange(0, 3);

void BM_PsiOverRationals(benchmark::State& state) {
  const ParamMatrix a = sample(cell_for(state.range(0)), FieldSpec::rationals(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(psi(a));
}
BENCHMARK(BM_PsiOverRationals)->DenseRange(0, 3);

void BM_Buchberger(benchmark::State& state) {
  const auto f = psi(sample(cell_for(state.range(0)), kField, 2)).f;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger<2>(f));
}
BENCHMARK(BM_Buchberger)->DenseRange(0, 3);

void BM_Canonicalize(benchmark::State& state) {
  const auto f = psi(sample(cell_for(state.range(0)), kField, 3)).f;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(f));
}
BENCHMARK(BM_Canonicalize)->DenseRange(0, 3);

void BM_PsiBar(benchmark::State& state) {
  const ParamMatrix a = sample(cell_for(state.range(0)), kField, 4);
  for (auto _ : state) benchmark::DoNotOptimize(psi_bar_by_minors(a));
}
BENCHMARK(BM_PsiBar)->DenseRange(0, 3);

void BM_BettiNumbers(benchmark::State& state) {
  const ParamMatrix a = sample(cell_for(state.range(0)), kField, 5);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(a));
}
BENCHMARK(BM_BettiNumbers)->DenseRange(0, 3);

void BM_MinimalizeHomogeneous(benchmark::State& state) {
  const auto F = psi_bar(sample(cell_for(state.range(0)), kField, 6)).F;
  for (auto _ : state) benchmark::DoNotOptimize(minimalize_homogeneous(F));
}
BENCHMARK(BM_MinimalizeHomogeneous)->DenseRange(0, 3);

}  // namespace
