#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "permsort/cost_matrix.hpp"

namespace permsort::cli {

struct BenchRow {
  int k = 0;
  int trials = 0;
  double mean_raw = 0;
  double mean_opt = 0;
};

// splitmix64 finalizer over (seed, k, trial), so every trial owns an
// independent stream regardless of evaluation order.
std::uint64_t trial_seed(std::uint64_t seed, int k, int trial);

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform_unit(std::mt19937_64& engine);

// Complete k x k raw cost matrix with i.i.d. uniform [0, 1) entries, drawn
// for pairs (a, b), a < b, in lexicographic order.
CostMatrix random_uniform_costs(int k, std::mt19937_64& engine);

// For each k in [kmin, kmax]: mean minimum-length decomposition cost of the
// cycle (1 2 ... k) on raw costs and on optimized costs.
// Throws ContractError unless 3 <= kmin <= kmax <= 14 and trials >= 1.
std::vector<BenchRow> run_bench(int kmin, int kmax, int trials,
                                std::uint64_t seed);

// Header "k,trials,mean_raw,mean_opt", six fractional digits.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace permsort::cli
