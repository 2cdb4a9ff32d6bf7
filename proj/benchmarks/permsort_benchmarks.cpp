#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "permsort/permsort.hpp"

namespace {

using namespace permsort;

CostMatrix random_costs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 100);
  CostMatrix m(n);
  for (Label a = 1; a <= static_cast<Label>(n); ++a) {
    for (Label b = a + 1; b <= static_cast<Label>(n); ++b) m.set(a, b, dist(rng));
  }
  return m;
}

Cycle full_cycle(std::size_t k) {
  std::vector<Label> v(k);
  std::iota(v.begin(), v.end(), 1);
  return Cycle(v);
}

void BM_TripleSubstitution(benchmark::State& state) {
  const CostMatrix raw = random_costs(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_triple_substitution(raw));
}
BENCHMARK(BM_TripleSubstitution)->RangeMultiplier(2)->Range(4, 32);

void BM_AllPairsBellmanFord(benchmark::State& state) {
  const CostMatrix raw = random_costs(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_all_pairs(raw));
}
BENCHMARK(BM_AllPairsBellmanFord)->RangeMultiplier(2)->Range(4, 32);

void BM_IntervalDp(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const CostMatrix star = optimize_all_pairs(random_costs(k, 3));
  const Cycle c = full_cycle(k);
  for (auto _ : state) benchmark::DoNotOptimize(min_cost_mld(c, star));
}
BENCHMARK(BM_IntervalDp)->RangeMultiplier(2)->Range(4, 64);

void BM_CayleySearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CostMatrix raw = random_costs(n, 4);
  const Cycle c = full_cycle(n);
  const Permutation p = Permutation::from_cycles(n, std::span<const Cycle>(&c, 1));
  for (auto _ : state) benchmark::DoNotOptimize(mcd_exact(p, raw, n));
}
BENCHMARK(BM_CayleySearch)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
