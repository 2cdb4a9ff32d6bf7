#include "permsort_cli/bench.hpp"

#include <cstdio>
#include <numeric>

#include "permsort/cycle_decomposer.hpp"
#include "permsort/error.hpp"
#include "permsort/optimizer.hpp"

namespace permsort::cli {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int k, int trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(k));
  return splitmix64(h ^ static_cast<std::uint64_t>(trial));
}

double uniform_unit(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

CostMatrix random_uniform_costs(int k, std::mt19937_64& engine) {
  CostMatrix m(static_cast<std::size_t>(k));
  for (Label a = 1; a <= k; ++a) {
    for (Label b = a + 1; b <= k; ++b) m.set(a, b, uniform_unit(engine));
  }
  return m;
}

std::vector<BenchRow> run_bench(int kmin, int kmax, int trials,
                                std::uint64_t seed) {
  if (kmin < 3 || kmin > kmax || kmax > 14 || trials < 1) {
    throw ContractError("bench needs 3 <= kmin <= kmax <= 14 and trials >= 1");
  }
  std::vector<BenchRow> rows;
  for (int k = kmin; k <= kmax; ++k) {
    std::vector<Label> labels(static_cast<std::size_t>(k));
    std::iota(labels.begin(), labels.end(), 1);
    const Cycle cycle(labels);
    double raw_sum = 0;
    double opt_sum = 0;
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 engine(trial_seed(seed, k, t));
      const CostMatrix raw = random_uniform_costs(k, engine);
      raw_sum += min_cost_mld(cycle, raw, {.trust_raw = true}).cost;
      opt_sum += min_cost_mld(cycle, optimize_all_pairs(raw)).cost;
    }
    rows.push_back({k, trials, raw_sum / trials, opt_sum / trials});
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "k,trials,mean_raw,mean_opt\n";
  char buf[128];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%.6f,%.6f\n", r.k, r.trials,
                  r.mean_raw, r.mean_opt);
    out += buf;
  }
  return out;
}

}  // namespace permsort::cli
