#include "permsort/permutation_decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "permsort/error.hpp"

namespace permsort {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kPerCycleMld:
      return "mld";
    case Method::kPerCycleStd:
      return "std";
    case Method::kMergedMld:
      return "merge";
    case Method::kMetricExact:
      return "metric-exact";
  }
  return "?";
}

Cost ratio(Cost cost, Cost bound) {
  if (bound == 0) return cost == 0 ? 1 : kInfinity;
  return cost / bound;
}

Cost permutation_lower_bound(const Permutation& p, const CostMatrix& costs) {
  Cost total = 0;
  for (const Cycle& c : nontrivial_cycles(p)) total += cycle_lower_bound(c, costs);
  return total;
}

namespace {

void check_size(const Permutation& p, const CostMatrix& m) {
  if (p.size() != m.size()) {
    throw ContractError("permutation has n=" + std::to_string(p.size()) +
                        " but the cost matrix has n=" + std::to_string(m.size()));
  }
}

DecompositionReport finish(const Permutation& p, Method method,
                           std::optional<Decomposition> d, Cost cost,
                           std::optional<Transposition> blocking,
                           const CostMatrix& phi_star,
                           const DecomposeOptions& options) {
  DecompositionReport report{p, method, std::nullopt, kInfinity,
                             permutation_lower_bound(p, phi_star), kInfinity,
                             blocking, Decomposition{}};
  if (!d) return report;
  if (options.expand) {
    *d = expand_decomposition(*d, *options.expand);
    cost = decomposition_cost(*d, options.expand->raw());
  }
  if (!validate_decomposition(*d, p)) {
    throw ContractError("internal error: " + std::string(method_name(method)) +
                        " produced a decomposition that does not multiply to the target");
  }
  report.decomposition = std::move(d);
  report.cost = cost;
  report.alpha_upper = ratio(cost, report.lower_bound);
  return report;
}

CycleSolution solve_cycle(const Cycle& c, const CostMatrix& phi_star,
                          Method method, const DecomposeOptions& options) {
  switch (method) {
    case Method::kPerCycleMld:
      return min_cost_mld(c, phi_star, {options.trust_raw});
    case Method::kPerCycleStd:
      return simple_transposition_decomposition(c, phi_star);
    case Method::kMetricExact:
      if (!options.path) {
        throw ContractError("metric-exact needs the defining path");
      }
      return metric_path_mcd(c, phi_star, *options.path);
    case Method::kMergedMld:
      break;
  }
  throw ContractError("solve_cycle: unsupported method");
}

// Union-find over labels.
struct Components {
  explicit Components(std::size_t n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Label find(Label x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Label x, Label y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
  std::vector<Label> parent;
};

}  // namespace

DecompositionReport decompose(const Permutation& p, const CostMatrix& phi_star,
                              Method method, const DecomposeOptions& options) {
  check_size(p, phi_star);
  if (method == Method::kMergedMld) return merged_decompose(p, phi_star, options);
  Decomposition out;
  Cost total = 0;
  for (const Cycle& c : nontrivial_cycles(p)) {
    CycleSolution s = solve_cycle(c, phi_star, method, options);
    if (!s.feasible()) {
      return finish(p, method, std::nullopt, kInfinity, s.blocking, phi_star,
                    options);
    }
    out.append(*s.decomposition);
    total += s.cost;
  }
  return finish(p, method, std::move(out), total, std::nullopt, phi_star,
                options);
}

MergeResult merge_cycles(const Permutation& p, const CostMatrix& phi_star,
                         std::span<const Transposition> forced) {
  check_size(p, phi_star);
  const auto n = p.size();
  Components comp(n);
  std::vector<bool> moved(n + 1, false);
  for (const Cycle& c : nontrivial_cycles(p)) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      moved[c[i]] = true;
      comp.unite(c[0], c[i]);
    }
  }
  Decomposition joins;
  Permutation merged = p;
  for (const Transposition& t : forced) {
    if (static_cast<std::size_t>(t.b()) > n) {
      throw ContractError("join label out of range");
    }
    if (!comp.unite(t.a(), t.b())) {
      throw ContractError("join (" + std::to_string(t.a()) + " " +
                          std::to_string(t.b()) +
                          ") does not connect two different cycles");
    }
    moved[t.a()] = moved[t.b()] = true;
    joins.append(t);
    merged = apply_transposition(merged, t);
  }

  std::vector<std::tuple<Cost, Label, Label>> edges;
  for (Label a = 1; a <= static_cast<Label>(n); ++a) {
    if (!moved[a]) continue;
    for (Label b = a + 1; b <= static_cast<Label>(n); ++b) {
      if (moved[b] && comp.find(a) != comp.find(b)) {
        edges.emplace_back(phi_star(a, b), a, b);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [w, a, b] : edges) {
    if (comp.unite(a, b)) {
      joins.append(Transposition(a, b));
      merged = apply_transposition(merged, Transposition(a, b));
    }
  }
  return MergeResult{std::move(joins), std::move(merged)};
}

DecompositionReport merged_decompose(const Permutation& p,
                                     const CostMatrix& phi_star,
                                     const DecomposeOptions& options) {
  check_size(p, phi_star);
  const MergeResult m = merge_cycles(p, phi_star, options.joins);
  const Cost join_cost = decomposition_cost(m.joins, phi_star);
  Decomposition out = m.joins;
  Cost total = join_cost;
  std::optional<Transposition> blocking;
  for (const Cycle& c : nontrivial_cycles(m.merged)) {
    CycleSolution s = min_cost_mld(c, phi_star, {options.trust_raw});
    if (!s.feasible()) {
      blocking = s.blocking;
      break;
    }
    out.append(*s.decomposition);
    total += s.cost;
  }
  if (!blocking && !is_finite(join_cost)) {
    for (const Transposition& t : m.joins) {
      if (!is_finite(phi_star(t))) {
        blocking = t;
        break;
      }
    }
  }
  DecompositionReport report =
      blocking ? finish(p, Method::kMergedMld, std::nullopt, kInfinity, blocking,
                        phi_star, options)
               : finish(p, Method::kMergedMld, std::move(out), total,
                        std::nullopt, phi_star, options);
  report.joins = m.joins;
  return report;
}

BoundSummary bound_report(const Permutation& p, const CostMatrix& raw,
                          const CostMatrix& phi_star) {
  check_size(p, raw);
  check_size(p, phi_star);
  BoundSummary s;
  s.lower_bound = permutation_lower_bound(p, raw);
  s.integral = raw.all_finite_integral();
  s.certified_lower = s.integral ? std::ceil(s.lower_bound) : s.lower_bound;
  s.mld = decompose(p, phi_star, Method::kPerCycleMld).cost;
  s.std = decompose(p, phi_star, Method::kPerCycleStd).cost;
  s.merged = merged_decompose(p, phi_star).cost;
  s.mld_ratio = ratio(s.mld, s.lower_bound);
  s.std_ratio = ratio(s.std, s.lower_bound);
  s.merged_ratio = ratio(s.merged, s.lower_bound);

  const auto n = p.size();
  const auto k = cycle_count(p);
  const Cost lo = phi_star.min_finite();
  const Cost hi = phi_star.max_finite();
  if (n > k && lo > 0 && is_finite(lo) && is_finite(hi)) {
    s.worst_case_alpha = 4 + 5.0 * static_cast<Cost>(k) * hi /
                                 (static_cast<Cost>(n - k) * lo);
  }
  s.mld_optimal = is_finite(s.mld) && s.mld <= s.certified_lower;
  return s;
}

}  // namespace permsort
