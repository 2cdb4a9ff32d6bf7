#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "permsort/cost_matrix.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

// Interval table of the minimum-length decomposition DP over one cycle.
// Positions are 0-based offsets into the cycle's canonical rotation; entry
// (i, j) covers the contiguous sub-cycle (c_i ... c_j).
class MldTable {
 public:
  MldTable(const Cycle& cycle, const CostMatrix& costs);

  std::size_t size() const noexcept { return k_; }
  Cost cost(std::size_t i, std::size_t j) const { return cost_[i * k_ + j]; }
  // Minimizing (s, r) of entry (i, j), i < j.
  std::pair<std::size_t, std::size_t> split(std::size_t i, std::size_t j) const {
    return split_[i * k_ + j];
  }
  Cost total() const { return cost(0, k_ - 1); }

  // Written-order decomposition of the whole cycle. Requires a finite total.
  Decomposition reconstruct() const;

 private:
  void emit(std::size_t i, std::size_t j, Decomposition& out) const;

  std::vector<Label> labels_;
  std::size_t k_;
  std::vector<Cost> cost_;
  std::vector<std::pair<std::size_t, std::size_t>> split_;
};

// Output of a single-cycle method. When the cost is infinite the
// decomposition is withheld and `blocking` names a pair that has no finite
// decomposition.
struct CycleSolution {
  std::optional<Decomposition> decomposition;
  Cost cost = 0;
  std::optional<Transposition> blocking;

  bool feasible() const noexcept { return decomposition.has_value(); }
  // Returns the decomposition or throws InfeasibleError naming the pair.
  const Decomposition& require() const;
};

struct MldOptions {
  // Accept a raw matrix as if it were optimized (skips the kind check).
  bool trust_raw = false;
};

// Minimum cost decomposition of the cycle into k - 1 transpositions.
// Throws ContractError unless the matrix is optimized or trust_raw is set.
CycleSolution min_cost_mld(const Cycle& cycle, const CostMatrix& phi_star,
                           MldOptions options = {});

// Adjacent chain c_{j+1} c_{j+2} ... c_j that skips the most expensive
// consecutive pair (the last one in canonical rotation order on ties).
CycleSolution simple_transposition_decomposition(const Cycle& cycle,
                                                 const CostMatrix& phi_star);

// Exact minimum cost decomposition of a cycle under a metric-path cost.
// Throws ContractError if `metric` is not the metric generated by `path`.
CycleSolution metric_path_mcd(const Cycle& cycle, const CostMatrix& metric,
                              const DefiningPath& path);

// Half the sum of shortest path costs between each element and its image.
// Any decomposition of the cycle costs at least this much.
Cost cycle_lower_bound(const Cycle& cycle, const CostMatrix& costs);
// Same, reading shortest path costs from a precomputed all-pairs matrix.
Cost cycle_lower_bound_from_shortest(const Cycle& cycle,
                                     const CostMatrix& shortest);

// Sum of costs between each element and its image.
Cost cycle_edge_sum(const Cycle& cycle, const CostMatrix& costs);

}  // namespace permsort
