#include "permsort/optimizer.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "permsort/error.hpp"

namespace permsort {

namespace {

std::size_t pair_index(std::size_t n, Label a, Label b) {
  const auto lo = static_cast<std::size_t>(std::min(a, b) - 1);
  const auto hi = static_cast<std::size_t>(std::max(a, b) - 1);
  return lo * n + hi;
}

std::string pair_name(Label a, Label b) {
  return "(" + std::to_string(a) + " " + std::to_string(b) + ")";
}

}  // namespace

OptimizerReport::OptimizerReport(
    CostMatrix raw, CostMatrix optimized,
    std::vector<std::optional<TripleWitness>> witnesses, int sweeps)
    : raw_(std::move(raw)),
      optimized_(std::move(optimized)),
      witnesses_(std::move(witnesses)),
      sweeps_(sweeps) {}

const std::optional<TripleWitness>& OptimizerReport::witness(Label a,
                                                             Label b) const {
  return witnesses_[pair_index(raw_.size(), a, b)];
}

OptimizerReport optimize_triple_substitution(const CostMatrix& raw) {
  const auto n = raw.size();
  CostMatrix cost = raw.with_kind(CostKind::kRaw);
  std::vector<std::optional<TripleWitness>> witnesses(n * n);

  std::vector<Transposition> list;
  for (Label a = 1; a <= static_cast<Label>(n); ++a) {
    for (Label b = a + 1; b <= static_cast<Label>(n); ++b) list.emplace_back(a, b);
  }
  // Ties on cost fall back to the lexicographic pair, so the order (and with
  // it every witness) is deterministic.
  const auto sort_list = [&] {
    std::stable_sort(list.begin(), list.end(),
                     [&](const Transposition& x, const Transposition& y) {
                       const Cost cx = cost(x);
                       const Cost cy = cost(y);
                       if (cx != cy) return cx < cy;
                       return x < y;
                     });
  };

  int sweeps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++sweeps;
    sort_list();
    for (std::size_t i = 1; i < list.size(); ++i) {
      const Transposition inner = list[i];
      const Cost inner_cost = cost(inner);
      for (std::size_t j = 0; j < i; ++j) {
        const Transposition outer = list[j];
        Label common = 0;
        if (outer.touches(inner.a())) common = inner.a();
        if (outer.touches(inner.b())) common = inner.b();
        if (common == 0) continue;
        const Label x = inner.a() == common ? inner.b() : inner.a();
        const Label y = outer.a() == common ? outer.b() : outer.a();
        const Cost candidate = inner_cost + 2 * cost(outer);
        if (candidate < cost(x, y)) {
          cost.set(x, y, candidate);
          witnesses[pair_index(n, x, y)] = TripleWitness{outer, inner};
          changed = true;
        }
      }
      sort_list();
    }
  }
  return OptimizerReport(raw.with_kind(CostKind::kRaw),
                         cost.with_kind(CostKind::kOptimized),
                         std::move(witnesses), sweeps);
}

PathTable bellman_ford(const CostMatrix& raw, Label source) {
  const auto n = raw.size();
  if (source < 1 || static_cast<std::size_t>(source) > n) {
    throw ContractError("bellman_ford: source " + std::to_string(source) +
                        " out of range");
  }
  PathTable t;
  t.source = source;
  t.transposition_cost.assign(n, kInfinity);
  t.twice_shortest.assign(n, kInfinity);
  t.pred_transposition.assign(n, {});
  t.pred_shortest.assign(n, {});
  for (Label u = 1; u <= static_cast<Label>(n); ++u) {
    if (u == source) continue;
    const Cost w = raw(source, u);
    if (!is_finite(w)) continue;
    t.transposition_cost[u - 1] = w;
    t.twice_shortest[u - 1] = 2 * w;
    t.pred_transposition[u - 1] = {source, PathKind::kShortest};
    t.pred_shortest[u - 1] = {source, PathKind::kShortest};
  }
  t.transposition_cost[source - 1] = 0;
  t.twice_shortest[source - 1] = 0;

  std::vector<std::pair<Label, Label>> edges;
  for (Label u = 1; u <= static_cast<Label>(n); ++u) {
    for (Label v = u + 1; v <= static_cast<Label>(n); ++v) {
      if (is_finite(raw(u, v))) edges.emplace_back(u, v);
    }
  }

  auto& d1 = t.transposition_cost;
  auto& d2 = t.twice_shortest;
  auto& p1 = t.pred_transposition;
  auto& p2 = t.pred_shortest;
  for (std::size_t pass = 1; pass < n; ++pass) {
    bool updated = false;
    for (const auto& [u, v] : edges) {
      const Cost w = raw(u, v);
      const auto iu = static_cast<std::size_t>(u - 1);
      const auto iv = static_cast<std::size_t>(v - 1);
      if (d2[iv] > d2[iu] + 2 * w) {
        d2[iv] = d2[iu] + 2 * w;
        p2[iv] = {u, PathKind::kShortest};
        updated = true;
      }
      if (d2[iu] > d2[iv] + 2 * w) {
        d2[iu] = d2[iv] + 2 * w;
        p2[iu] = {v, PathKind::kShortest};
        updated = true;
      }
      if (d1[iv] > d2[iu] + w) {
        d1[iv] = d2[iu] + w;
        p1[iv] = {u, PathKind::kShortest};
        updated = true;
      }
      if (d1[iu] > d2[iv] + w) {
        d1[iu] = d2[iv] + w;
        p1[iu] = {v, PathKind::kShortest};
        updated = true;
      }
      if (d1[iv] > d1[iu] + 2 * w) {
        d1[iv] = d1[iu] + 2 * w;
        p1[iv] = {u, PathKind::kTransposition};
        updated = true;
      }
      if (d1[iu] > d1[iv] + 2 * w) {
        d1[iu] = d1[iv] + 2 * w;
        p1[iu] = {v, PathKind::kTransposition};
        updated = true;
      }
    }
    t.passes = static_cast<int>(pass);
    if (!updated) break;
  }
  return t;
}

namespace {

// Follows predecessor links from (target, start) back to the source and
// returns the vertices in source-to-target order.
std::vector<Label> follow_links(const PathTable& table, Label target,
                                PathKind start) {
  const auto n = table.transposition_cost.size();
  if (target < 1 || static_cast<std::size_t>(target) > n) {
    throw ContractError("path target out of range");
  }
  if (target == table.source) return {target};
  const Cost reach = start == PathKind::kTransposition ? table.d1(target)
                                                       : table.d2(target);
  if (!is_finite(reach)) {
    throw InfeasibleError("no finite path " + pair_name(table.source, target));
  }
  std::vector<Label> walk{target};
  std::vector<bool> visited(2 * n, false);
  Label vertex = target;
  PathKind kind = start;
  while (vertex != table.source) {
    const auto slot = static_cast<std::size_t>(vertex - 1) * 2 +
                      (kind == PathKind::kShortest ? 1 : 0);
    if (visited[slot]) {
      throw ContractError("predecessor links revisit a vertex");
    }
    visited[slot] = true;
    const PredLink link = kind == PathKind::kTransposition
                              ? table.pred_transposition[vertex - 1]
                              : table.pred_shortest[vertex - 1];
    if (link.table == PathKind::kNone) {
      throw ContractError("broken predecessor chain");
    }
    walk.push_back(link.vertex);
    vertex = link.vertex;
    kind = link.table;
  }
  std::reverse(walk.begin(), walk.end());
  // Remove closed sub-walks (only zero-cost loops can survive optimality).
  std::vector<Label> simple;
  std::vector<std::size_t> position(n + 1, SIZE_MAX);
  for (Label v : walk) {
    if (position[v] != SIZE_MAX) {
      while (simple.back() != v) {
        position[simple.back()] = SIZE_MAX;
        simple.pop_back();
      }
      continue;
    }
    position[v] = simple.size();
    simple.push_back(v);
  }
  return simple;
}

std::size_t first_max_edge(std::span<const Label> path, const CostMatrix& raw) {
  std::size_t best = 0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (raw(path[i], path[i + 1]) > raw(path[best], path[best + 1])) best = i;
  }
  return best;
}

// (c0 c1 ... ck) = (c0 c1)(c1 c2)...(c_{k-1} c_k), written order.
void append_chain(Decomposition& out, std::span<const Label> cycle) {
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    out.append(Transposition(cycle[i], cycle[i + 1]));
  }
}

}  // namespace

std::vector<Label> recover_transposition_path(const PathTable& table,
                                              Label target) {
  return follow_links(table, target, PathKind::kTransposition);
}

std::vector<Label> recover_shortest_path(const PathTable& table, Label target) {
  return follow_links(table, target, PathKind::kShortest);
}

Cost transposition_path_cost(std::span<const Label> path, const CostMatrix& raw) {
  if (path.size() < 2) throw ContractError("path needs at least two vertices");
  Cost sum = 0;
  Cost max_edge = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Cost w = raw(path[i], path[i + 1]);
    if (!is_finite(w)) return kInfinity;
    sum += w;
    max_edge = std::max(max_edge, w);
  }
  return 2 * sum - max_edge;
}

Decomposition expand_along_path(std::span<const Label> path,
                                std::size_t dropped_edge) {
  if (path.size() < 2 || dropped_edge + 1 >= path.size()) {
    throw ContractError("expand_along_path: bad path or edge index");
  }
  const std::size_t i = dropped_edge;
  const std::size_t last = path.size() - 1;
  std::vector<Label> head(path.begin(), path.begin() + i + 1);  // c0..ci
  std::vector<Label> tail(path.begin() + i + 1, path.end());     // c_{i+1}..c_{m+1}
  std::vector<Label> head_rev(head.rbegin(), head.rend());
  std::vector<Label> tail_rev(tail.rbegin(), tail.rend());

  // (a b) = (c0..ci)(c_{m+1}..c_{i+1})(ci c_{i+1})(c_{i+1}..c_{m+1})(ci..c0)
  Decomposition out;
  append_chain(out, head);
  append_chain(out, tail_rev);
  out.append(Transposition(path[i], path[i + 1]));
  append_chain(out, tail);
  append_chain(out, head_rev);
  (void)last;
  return out;
}

namespace {

const Decomposition& expand_memo(Label a, Label b, const OptimizerReport& report,
                                 std::map<Transposition, Decomposition>& memo,
                                 int depth) {
  const Transposition key(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  if (depth > static_cast<int>(report.raw().size() * report.raw().size())) {
    throw ContractError("witness chain does not terminate at " +
                        pair_name(a, b));
  }
  Decomposition out;
  if (const auto& w = report.witness(a, b)) {
    const Decomposition& outer =
        expand_memo(w->outer.a(), w->outer.b(), report, memo, depth + 1);
    const Decomposition& inner =
        expand_memo(w->inner.a(), w->inner.b(), report, memo, depth + 1);
    out.append(outer);
    out.append(inner);
    out.append(outer);
  } else {
    if (!is_finite(report.raw()(a, b))) {
      throw InfeasibleError("no finite decomposition of " + pair_name(a, b));
    }
    out.append(key);
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

Decomposition expand_transposition(Label a, Label b,
                                   const OptimizerReport& report) {
  if (!is_finite(report.optimized()(a, b))) {
    throw InfeasibleError("no finite decomposition of " + pair_name(a, b));
  }
  std::map<Transposition, Decomposition> memo;
  return expand_memo(a, b, report, memo, 0);
}

Decomposition expand_transposition(Label a, Label b, const PathTable& table,
                                   const CostMatrix& raw) {
  if (table.source != a && table.source != b) {
    throw ContractError("path table source must be one of the two labels");
  }
  const Label other = table.source == a ? b : a;
  if (!is_finite(table.d1(other))) {
    throw InfeasibleError("no finite decomposition of " + pair_name(a, b));
  }
  std::vector<Label> path = recover_transposition_path(table, other);
  if (path.front() != a) std::reverse(path.begin(), path.end());
  return expand_along_path(path, first_max_edge(path, raw));
}

Decomposition expand_decomposition(const Decomposition& d,
                                   const OptimizerReport& report) {
  std::map<Transposition, Decomposition> memo;
  Decomposition out;
  for (const Transposition& t : d) {
    if (!is_finite(report.optimized()(t))) {
      throw InfeasibleError("no finite decomposition of " +
                            pair_name(t.a(), t.b()));
    }
    out.append(expand_memo(t.a(), t.b(), report, memo, 0));
  }
  return out;
}

CostMatrix optimize_all_pairs(const CostMatrix& raw) {
  const auto n = static_cast<Label>(raw.size());
  CostMatrix out(raw.size(), kInfinity, CostKind::kOptimized);
  for (Label s = 1; s <= n; ++s) {
    const PathTable t = bellman_ford(raw, s);
    for (Label u = s + 1; u <= n; ++u) out.set(s, u, t.d1(u));
  }
  return out;
}

CostMatrix shortest_path_costs(const CostMatrix& costs) {
  const auto n = static_cast<Label>(costs.size());
  CostMatrix out(costs.size(), kInfinity, CostKind::kRaw);
  for (Label s = 1; s <= n; ++s) {
    const PathTable t = bellman_ford(costs, s);
    for (Label u = s + 1; u <= n; ++u) out.set(s, u, t.d2(u) / 2);
  }
  return out;
}

CostMatrix extended_path_optimized(const DefiningPath& path) {
  path.check();
  const auto n = path.size();
  CostMatrix out(n, kInfinity, CostKind::kOptimized);
  for (std::size_t i = 0; i < n; ++i) {
    Cost sum = 0;
    Cost max_edge = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      sum += path.weights[j - 1];
      max_edge = std::max(max_edge, path.weights[j - 1]);
      out.set(path.order[i], path.order[j], 2 * sum - max_edge);
    }
  }
  return out;
}

}  // namespace permsort
