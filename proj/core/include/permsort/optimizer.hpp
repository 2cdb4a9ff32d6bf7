#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "permsort/cost_matrix.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

// (x y) = outer * inner * outer, where outer and inner share one label.
// Recorded whenever the triple substitution lowers the cost of (x y).
struct TripleWitness {
  Transposition outer;
  Transposition inner;
};

// Result of optimizing every transposition cost. `optimized` holds the
// cheapest decomposition cost of each transposition; the witnesses rebuild a
// decomposition achieving it out of raw transpositions.
class OptimizerReport {
 public:
  OptimizerReport(CostMatrix raw, CostMatrix optimized,
                  std::vector<std::optional<TripleWitness>> witnesses,
                  int sweeps);

  const CostMatrix& raw() const noexcept { return raw_; }
  const CostMatrix& optimized() const noexcept { return optimized_; }
  const std::optional<TripleWitness>& witness(Label a, Label b) const;
  // Full passes over the sorted list, including the final pass that changed
  // nothing.
  int sweeps() const noexcept { return sweeps_; }

 private:
  CostMatrix raw_;
  CostMatrix optimized_;
  std::vector<std::optional<TripleWitness>> witnesses_;
  int sweeps_;
};

// Sorted-list triple substitution: repeatedly replaces the cost of (x y) by
// cost(inner) + 2 cost(outer) whenever that is cheaper, rescanning the list in
// (cost, pair) order until a full pass changes nothing.
OptimizerReport optimize_triple_substitution(const CostMatrix& raw);

// Which of the two per-vertex tables a predecessor link points into.
enum class PathKind : unsigned char {
  kNone = 0,
  kTransposition = 1,  // minimum transposition path cost
  kShortest = 2,       // twice the shortest path cost
};

struct PredLink {
  Label vertex = 0;
  PathKind table = PathKind::kNone;
};

// Single-source output of the two-table Bellman-Ford search.
struct PathTable {
  Label source = 0;
  // Indexed by label - 1.
  std::vector<Cost> transposition_cost;  // min over paths of 2 cost - max edge
  std::vector<Cost> twice_shortest;      // 2 * shortest path cost
  std::vector<PredLink> pred_transposition;
  std::vector<PredLink> pred_shortest;
  int passes = 0;

  Cost d1(Label v) const { return transposition_cost[v - 1]; }
  Cost d2(Label v) const { return twice_shortest[v - 1]; }
};

// Relaxes every finite edge, in lexicographic order, for up to n - 1 passes
// (stopping early after a pass without updates).
PathTable bellman_ford(const CostMatrix& raw, Label source);

// Vertex sequence from the table's source to `target` realizing d1(target),
// with loops of zero cost removed. Throws InfeasibleError if unreachable.
std::vector<Label> recover_transposition_path(const PathTable& table,
                                              Label target);
// Vertex sequence of a shortest path from the source to `target`.
std::vector<Label> recover_shortest_path(const PathTable& table, Label target);

// 2 * (sum of edge costs) - (max edge cost) along `path` (>= 2 vertices).
Cost transposition_path_cost(std::span<const Label> path, const CostMatrix& raw);

// Odd-length palindrome of raw transpositions along `path` (first vertex a,
// last vertex b) whose product is (a b): the edge at `dropped_edge` sits in
// the middle and every other edge is used twice.
Decomposition expand_along_path(std::span<const Label> path,
                                std::size_t dropped_edge);

// Cheapest raw decomposition of (a b), replayed from triple witnesses.
Decomposition expand_transposition(Label a, Label b,
                                   const OptimizerReport& report);
// Same, built from a path table whose source is a or b. The dropped edge is
// the first maximum-cost edge on the path read from a.
Decomposition expand_transposition(Label a, Label b, const PathTable& table,
                                   const CostMatrix& raw);

// Replaces every transposition of d by its cheapest raw decomposition.
Decomposition expand_decomposition(const Decomposition& d,
                                   const OptimizerReport& report);

// Optimized costs from one Bellman-Ford run per source.
CostMatrix optimize_all_pairs(const CostMatrix& raw);

// Shortest path cost between every pair (d2 / 2 of each source).
CostMatrix shortest_path_costs(const CostMatrix& costs);

// Closed form of the optimized cost for an extended metric path: twice the
// path sum minus the largest edge between the two vertices.
CostMatrix extended_path_optimized(const DefiningPath& path);

}  // namespace permsort
