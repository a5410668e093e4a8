#include <benchmark/benchmark.h>

#include "bchlab/distance.hpp"
#include "bchlab/theory.hpp"

using namespace bchlab;

namespace {

std::pair<std::uint32_t, std::uint32_t> field_of(std::int64_t q) {
  switch (q) {
    case 8: return {2, 3};
    case 27: return {3, 3};
    case 64: return {2, 6};
    case 81: return {3, 4};
    case 243: return {3, 5};
    case 256: return {2, 8};
    default: return {5, 2};
  }
}

void BM_BuildField(benchmark::State& state) {
  const auto [p, s] = field_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_field(p, s));
}
BENCHMARK(BM_BuildField)->Arg(27)->Arg(81)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ColumnSearch(benchmark::State& state) {
  const auto [p, s] = field_of(state.range(0));
  const BchCode code = build_bch(build_field(p, s), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_by_columns(code));
}
BENCHMARK(BM_ColumnSearch)->Arg(27)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_RootCount(benchmark::State& state) {
  const auto [p, s] = field_of(state.range(0));
  const BchCode code = build_bch(build_field(p, s), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dual_min_distance(code, DistanceMethod::RootCount));
}
BENCHMARK(BM_RootCount)->Arg(27)->Arg(81)->Arg(243)->Unit(benchmark::kMillisecond);

void BM_DualEnum(benchmark::State& state) {
  const auto [p, s] = field_of(state.range(0));
  const BchCode code = build_bch(build_field(p, s), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dual_min_distance(code, DistanceMethod::DualEnum));
}
BENCHMARK(BM_DualEnum)->Arg(27)->Arg(81)->Unit(benchmark::kMillisecond);

void BM_QuadrupleSearch(benchmark::State& state) {
  const auto [p, s] = field_of(state.range(0));
  const auto f = build_field(p, s);
  for (auto _ : state) benchmark::DoNotOptimize(exists_e_quadruple(*f, 4));
}
BENCHMARK(BM_QuadrupleSearch)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
