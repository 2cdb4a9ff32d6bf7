#include "permsort/cycle_decomposer.hpp"

#include <algorithm>
#include <string>

#include "permsort/error.hpp"
#include "permsort/optimizer.hpp"

namespace permsort {

namespace {

std::string pair_name(const Transposition& t) {
  return "(" + std::to_string(t.a()) + " " + std::to_string(t.b()) + ")";
}

CycleSolution infeasible(std::optional<Transposition> blocking) {
  return CycleSolution{std::nullopt, kInfinity, blocking};
}

}  // namespace

const Decomposition& CycleSolution::require() const {
  if (!decomposition) {
    throw InfeasibleError(
        blocking ? "no finite decomposition: pair " + pair_name(*blocking) +
                       " has infinite cost"
                 : std::string("no finite decomposition"));
  }
  return *decomposition;
}

MldTable::MldTable(const Cycle& cycle, const CostMatrix& costs)
    : labels_(cycle.elements().begin(), cycle.elements().end()),
      k_(cycle.size()),
      cost_(k_ * k_, kInfinity),
      split_(k_ * k_, {0, 0}) {
  for (Label x : labels_) {
    if (x < 1 || static_cast<std::size_t>(x) > costs.size()) {
      throw ContractError("cycle element " + std::to_string(x) +
                          " outside the cost matrix");
    }
  }
  for (std::size_t i = 0; i < k_; ++i) cost_[i * k_ + i] = 0;
  for (std::size_t len = 1; len < k_; ++len) {
    for (std::size_t i = 0; i + len < k_; ++i) {
      const std::size_t j = i + len;
      Cost best = kInfinity;
      std::pair<std::size_t, std::size_t> arg{i, i + 1};
      // r outer, s inner, strict improvement: smallest r, then smallest s.
      for (std::size_t r = i + 1; r <= j; ++r) {
        const Cost edge = costs(labels_[i], labels_[r]);
        if (!is_finite(edge)) continue;
        const Cost right = cost(r, j);
        for (std::size_t s = i; s < r; ++s) {
          const Cost c = cost(i, s) + cost(s + 1, r) + right + edge;
          if (c < best) {
            best = c;
            arg = {s, r};
          }
        }
      }
      cost_[i * k_ + j] = best;
      split_[i * k_ + j] = arg;
    }
  }
}

// (c_i ... c_j) = (c_{s+1} ... c_r)(c_i c_r)(c_r ... c_j)(c_i ... c_s)
void MldTable::emit(std::size_t i, std::size_t j, Decomposition& out) const {
  if (i >= j) return;
  const auto [s, r] = split(i, j);
  emit(s + 1, r, out);
  out.append(Transposition(labels_[i], labels_[r]));
  emit(r, j, out);
  emit(i, s, out);
}

Decomposition MldTable::reconstruct() const {
  if (!is_finite(total())) {
    throw InfeasibleError("cycle has no finite minimum-length decomposition");
  }
  Decomposition out;
  emit(0, k_ - 1, out);
  return out;
}

CycleSolution min_cost_mld(const Cycle& cycle, const CostMatrix& phi_star,
                           MldOptions options) {
  if (!options.trust_raw && phi_star.kind() != CostKind::kOptimized) {
    throw ContractError(
        "min_cost_mld needs optimized costs; optimize first or pass trust_raw");
  }
  if (cycle.size() < 2) return CycleSolution{Decomposition{}, 0, std::nullopt};
  const MldTable table(cycle, phi_star);
  if (!is_finite(table.total())) {
    // With optimized costs an infinite total means some consecutive pair
    // cannot be decomposed at all; report the first one.
    std::optional<Transposition> blocking;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!is_finite(phi_star(cycle[i], cycle.next(i)))) {
        blocking = Transposition(cycle[i], cycle.next(i));
        break;
      }
    }
    return infeasible(blocking);
  }
  return CycleSolution{table.reconstruct(), table.total(), std::nullopt};
}

CycleSolution simple_transposition_decomposition(const Cycle& cycle,
                                                 const CostMatrix& phi_star) {
  const std::size_t k = cycle.size();
  if (k < 2) return CycleSolution{Decomposition{}, 0, std::nullopt};
  std::size_t skip = 0;
  std::size_t infinite_edges = 0;
  std::optional<Transposition> blocking;
  for (std::size_t i = 0; i < k; ++i) {
    const Cost c = phi_star(cycle[i], cycle.next(i));
    if (!is_finite(c)) {
      ++infinite_edges;
      if (infinite_edges == 2) blocking = Transposition(cycle[i], cycle.next(i));
    }
    if (c >= phi_star(cycle[skip], cycle.next(skip))) skip = i;
  }
  if (infinite_edges >= 2) return infeasible(blocking);

  Decomposition chain;
  Cost total = 0;
  for (std::size_t step = 1; step < k; ++step) {
    const std::size_t from = (skip + step) % k;
    const Transposition t(cycle[from], cycle.next(from));
    chain.append(t);
    total += phi_star(t);
  }
  return CycleSolution{std::move(chain), total, std::nullopt};
}

namespace {

// Builds the decomposition of the cycle listed by `order` (each element maps
// to the next one) by attaching an end vertex of the induced path to its
// neighbour and recursing on the two arcs this splits off.
void metric_tree(std::vector<Label> order, const std::vector<std::size_t>& rank,
                 Decomposition& out) {
  const std::size_t m = order.size();
  if (m < 2) return;
  const auto leaf_it = std::min_element(
      order.begin(), order.end(),
      [&](Label x, Label y) { return rank[x] < rank[y]; });
  std::rotate(order.begin(), leaf_it, order.end());
  std::size_t p = 1;
  for (std::size_t q = 2; q < m; ++q) {
    if (rank[order[q]] < rank[order[p]]) p = q;
  }
  // (d1 ... dm) = (d2 ... dp)(d1 dp)(dp ... dm)
  metric_tree(std::vector<Label>(order.begin() + 1, order.begin() + p + 1),
              rank, out);
  out.append(Transposition(order[0], order[p]));
  metric_tree(std::vector<Label>(order.begin() + p, order.end()), rank, out);
}

}  // namespace

CycleSolution metric_path_mcd(const Cycle& cycle, const CostMatrix& metric,
                              const DefiningPath& path) {
  path.check();
  if (path.size() != metric.size() ||
      metric_path(path).with_kind(metric.kind()) != metric) {
    throw ContractError("cost matrix is not the metric of the given path");
  }
  std::vector<std::size_t> rank(path.size() + 1, 0);
  for (std::size_t i = 0; i < path.size(); ++i) rank[path.order[i]] = i;
  Decomposition out;
  metric_tree(std::vector<Label>(cycle.elements().begin(), cycle.elements().end()),
              rank, out);
  return CycleSolution{out, decomposition_cost(out, metric), std::nullopt};
}

Cost cycle_edge_sum(const Cycle& cycle, const CostMatrix& costs) {
  if (cycle.size() < 2) return 0;
  Cost sum = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    sum += costs(cycle[i], cycle.next(i));
  }
  return sum;
}

Cost cycle_lower_bound_from_shortest(const Cycle& cycle,
                                     const CostMatrix& shortest) {
  return cycle_edge_sum(cycle, shortest) / 2;
}

Cost cycle_lower_bound(const Cycle& cycle, const CostMatrix& costs) {
  if (cycle.size() < 2) return 0;
  Cost sum = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const PathTable table = bellman_ford(costs, cycle[i]);
    sum += table.d2(cycle.next(i)) / 2;
  }
  return sum / 2;
}

}  // namespace permsort
