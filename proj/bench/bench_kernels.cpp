// OpenMP line-scan kernels against the serial bounding-box reference.

#include <benchmark/benchmark.h>

#include "kstab/fixtures.hpp"
#include "kstab/kernels.hpp"

using namespace kstab;

namespace {

const LatticePolytope& polytope(std::int64_t which) {
  static const LatticePolytope p2 = fixtures::f1_trapezoid();
  static const LatticePolytope p3 = fixtures::simplex3();
  return which == 2 ? p2 : p3;
}

const std::vector<AffinePiece> kPieces = {{{0, 0, 0}, 0}, {{1, 1, 0}, -1}, {{0, -1, 2}, 1}};
const std::vector<AffinePiece> kPieces2 = {{{0, 0}, 0}, {{1, 1}, -1}, {{2, -1}, 1}};

void BM_Count(benchmark::State& state) {
  const auto& p = polytope(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count(p, state.range(1)));
}

void BM_CountReference(benchmark::State& state) {
  const auto& p = polytope(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_reference(p, state.range(1)));
}

void BM_WeightSums(benchmark::State& state) {
  const auto& p = polytope(state.range(0));
  const auto& pieces = state.range(0) == 2 ? kPieces2 : kPieces;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weight_sums(p, pieces, state.range(1)));
}

void BM_WeightSumsReference(benchmark::State& state) {
  const auto& p = polytope(state.range(0));
  const auto& pieces = state.range(0) == 2 ? kPieces2 : kPieces;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weight_sums_reference(p, pieces, state.range(1)));
}

void BM_Enumerate(benchmark::State& state) {
  const auto& p = polytope(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate(p, state.range(1)));
}

void BM_EnumerateReference(benchmark::State& state) {
  const auto& p = polytope(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_reference(p, state.range(1)));
}

void args(benchmark::internal::Benchmark* b) {
  for (std::int64_t k : {16, 64, 256}) b->Args({2, k});
  for (std::int64_t k : {8, 32, 64}) b->Args({3, k});
}

}  // namespace

BENCHMARK(BM_Count)->Apply(args);
BENCHMARK(BM_CountReference)->Apply(args);
BENCHMARK(BM_WeightSums)->Apply(args);
BENCHMARK(BM_WeightSumsReference)->Apply(args);
BENCHMARK(BM_Enumerate)->Apply(args);
BENCHMARK(BM_EnumerateReference)->Apply(args);

BENCHMARK_MAIN();
