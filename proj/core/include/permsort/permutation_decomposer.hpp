#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "permsort/cost_matrix.hpp"
#include "permsort/cycle_decomposer.hpp"
#include "permsort/optimizer.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

enum class Method { kPerCycleMld, kPerCycleStd, kMergedMld, kMetricExact };

std::string_view method_name(Method m);

struct DecomposeOptions {
  // Run the DP on a raw matrix without the optimized-kind check.
  bool trust_raw = false;
  // When set, every transposition is replaced by its cheapest sequence of raw
  // transpositions, and the cost is taken under the raw matrix.
  const OptimizerReport* expand = nullptr;
  // Joining transpositions for kMergedMld; empty means greedy selection.
  std::vector<Transposition> joins;
  // Required by kMetricExact.
  const DefiningPath* path = nullptr;
};

struct DecompositionReport {
  Permutation target;
  Method method;
  // Withheld when the cost is infinite.
  std::optional<Decomposition> decomposition;
  Cost cost = 0;
  // Half the sum of shortest path costs from each moved element to its image.
  Cost lower_bound = 0;
  // cost / lower_bound. The lower bound is below the true optimum, so this
  // over-estimates the real approximation ratio.
  Cost alpha_upper = 1;
  // A pair with no finite decomposition when the cost is infinite.
  std::optional<Transposition> blocking;
  // Joining transpositions used by kMergedMld, in application order.
  Decomposition joins;
};

// Lower bound on the cost of any decomposition of p.
Cost permutation_lower_bound(const Permutation& p, const CostMatrix& costs);

DecompositionReport decompose(const Permutation& p, const CostMatrix& phi_star,
                              Method method, const DecomposeOptions& options = {});

struct MergeResult {
  // t_1, ..., t_{k-1}: applying them in this order to p yields `merged`.
  Decomposition joins;
  Permutation merged;
};

// Joins the non-trivial cycles of p into one. Given joins are applied first
// (each must connect two different current cycles); remaining cycles are
// joined greedily by the cheapest pair between different cycles, ties broken
// lexicographically. Fixed points are never joined by the greedy step.
MergeResult merge_cycles(const Permutation& p, const CostMatrix& phi_star,
                         std::span<const Transposition> forced = {});

// Written decomposition joins ++ mld(merged), whose product is p.
DecompositionReport merged_decompose(const Permutation& p,
                                     const CostMatrix& phi_star,
                                     const DecomposeOptions& options = {});

struct BoundSummary {
  Cost lower_bound = 0;
  // True when every finite cost is an integer, so any decomposition cost is
  // one too and the bound rounds up.
  bool integral = false;
  Cost certified_lower = 0;
  Cost mld = 0;
  Cost std = 0;
  Cost merged = 0;
  // Ratios of each method to the lower bound.
  Cost mld_ratio = 1;
  Cost std_ratio = 1;
  Cost merged_ratio = 1;
  // 4 + 5k max / ((n - k) min), k = number of cycles; absent when the
  // smallest finite cost is zero or p is the identity.
  std::optional<Cost> worst_case_alpha;
  // The minimum-length cost meets the certified lower bound, so it is optimal.
  bool mld_optimal = false;
};

BoundSummary bound_report(const Permutation& p, const CostMatrix& raw,
                          const CostMatrix& phi_star);

// cost / bound, with 0 / 0 read as 1.
Cost ratio(Cost cost, Cost bound);

}  // namespace permsort
