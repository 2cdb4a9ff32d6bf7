#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "permsort/permutation.hpp"

namespace permsort {

// Transposition costs are non-negative doubles or +infinity. Adding to
// infinity stays infinite; subtracting from infinity is a programming error.
using Cost = double;
inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

inline bool is_finite(Cost c) noexcept { return c != kInfinity; }

// raw: costs as given. optimized: each entry is already the cheapest
// decomposition cost of its transposition.
enum class CostKind { kRaw, kOptimized };

// Symmetric table of transposition costs over {1..n}.
class CostMatrix {
 public:
  // All off-diagonal entries start at `fill`.
  explicit CostMatrix(std::size_t n, Cost fill = kInfinity,
                      CostKind kind = CostKind::kRaw);

  std::size_t size() const noexcept { return n_; }
  CostKind kind() const noexcept { return kind_; }

  Cost operator()(Label a, Label b) const {
    return cost_[index(a, b)];
  }
  Cost operator()(const Transposition& t) const { return (*this)(t.a(), t.b()); }

  // Sets both (a,b) and (b,a). Throws ContractError on a == b, a label out of
  // range, NaN, or a negative value.
  void set(Label a, Label b, Cost value);

  // Same entries with a different provenance flag. Used to run algorithms
  // that demand optimized input directly on raw costs.
  CostMatrix with_kind(CostKind kind) const;

  // Finite off-diagonal extremes; kInfinity / 0 results when nothing is
  // finite.
  Cost max_finite() const;
  Cost min_finite() const;
  bool all_finite_integral() const;

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t index(Label a, Label b) const {
    return static_cast<std::size_t>(a - 1) * n_ + static_cast<std::size_t>(b - 1);
  }

  std::size_t n_;
  std::vector<Cost> cost_;
  CostKind kind_;
};

// Sum of entry costs of every transposition in d.
Cost decomposition_cost(const Decomposition& d, const CostMatrix& costs);

// Weighted path on all n vertices: order lists the vertices from one end to
// the other, weights[i] is the weight of edge (order[i], order[i+1]).
struct DefiningPath {
  std::vector<Label> order;
  std::vector<Cost> weights;

  // Throws ContractError unless order is a permutation of {1..n}, n >= 2
  // and there are n - 1 finite non-negative weights.
  void check() const;
  std::size_t size() const noexcept { return order.size(); }
};

struct CostEntry {
  Label a;
  Label b;
  Cost value;
};

// Unspecified pairs are infinite. Duplicate pairs must agree.
CostMatrix from_pairs(std::size_t n, std::span<const CostEntry> entries);

// cost(i, j) = sum of weights along the path between i and j.
CostMatrix metric_path(const DefiningPath& path);
// cost(i, j) = weight for path edges, infinity otherwise.
CostMatrix extended_metric_path(const DefiningPath& path);

// Triangle inequality over all triples; a bound involving an infinite entry
// holds trivially.
bool is_metric(const CostMatrix& costs, Cost tolerance = 0.0);

// Text formats.
//   cost file:  "n <N>" then "<a> <b> <value|inf>" lines; '#' starts a comment.
//   path file:  "path", then the vertex order, then the n - 1 weights.
// parse_cost_text accepts either and reports which one it saw.
struct ParsedCosts {
  CostMatrix matrix;
  std::optional<DefiningPath> path;
};
ParsedCosts parse_cost_text(std::string_view text);
CostMatrix parse_cost_file(std::string_view text);
DefiningPath parse_path_file(std::string_view text);

// Writes every pair a < b; values use the shortest round-trip decimal form.
std::string serialize_cost_file(const CostMatrix& costs);
std::string format_cost(Cost c);

}  // namespace permsort
