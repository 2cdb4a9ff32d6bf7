#include "permsort/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "permsort/error.hpp"

namespace permsort {

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw SizeGuardError(std::string(what) + ": size " + std::to_string(n) +
                         " exceeds the limit " + std::to_string(limit));
  }
}

// Transpositions with finite cost and their weights.
std::vector<std::pair<Transposition, Cost>> finite_moves(const CostMatrix& m) {
  std::vector<std::pair<Transposition, Cost>> out;
  const auto n = static_cast<Label>(m.size());
  for (Label a = 1; a <= n; ++a) {
    for (Label b = a + 1; b <= n; ++b) {
      if (is_finite(m(a, b))) out.emplace_back(Transposition(a, b), m(a, b));
    }
  }
  return out;
}

struct Settled {
  std::vector<Cost> dist;
  std::vector<std::uint64_t> pred;
  std::vector<std::size_t> move;  // index into the move list
  std::size_t settled = 0;
};

// Dijkstra from `start` until `goal` is settled. `allowed(q, t)` filters
// the moves out of state q.
Settled dijkstra(const Permutation& start, const Permutation& goal,
                 const std::vector<std::pair<Transposition, Cost>>& moves,
                 const std::function<bool(const Permutation&,
                                          const Transposition&)>& allowed) {
  const auto n = start.size();
  const std::uint64_t states = factorial(n);
  Settled s;
  s.dist.assign(states, kInfinity);
  s.pred.assign(states, 0);
  s.move.assign(states, SIZE_MAX);
  std::vector<bool> done(states, false);
  using Item = std::pair<Cost, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  const std::uint64_t from = lehmer_rank(start);
  const std::uint64_t to = lehmer_rank(goal);
  s.dist[from] = 0;
  heap.emplace(0, from);
  while (!heap.empty()) {
    const auto [d, r] = heap.top();
    heap.pop();
    if (done[r]) continue;
    done[r] = true;
    ++s.settled;
    if (r == to) break;
    const Permutation q = lehmer_unrank(r, n);
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const auto& [t, w] = moves[i];
      if (!allowed(q, t)) continue;
      const std::uint64_t next = lehmer_rank(apply_transposition(q, t));
      if (d + w < s.dist[next]) {
        s.dist[next] = d + w;
        s.pred[next] = r;
        s.move[next] = i;
        heap.emplace(d + w, next);
      }
    }
  }
  return s;
}

// Moves from `goal` back to `start`, listed in the order they are met.
std::vector<Transposition> backtrack(
    const Settled& s, const Permutation& start, const Permutation& goal,
    const std::vector<std::pair<Transposition, Cost>>& moves) {
  std::vector<Transposition> out;
  const std::uint64_t from = lehmer_rank(start);
  for (std::uint64_t r = lehmer_rank(goal); r != from; r = s.pred[r]) {
    out.push_back(moves[s.move[r]].first);
  }
  return out;
}

}  // namespace

std::uint64_t lehmer_rank(const Permutation& p) {
  const auto img = p.images();
  const auto n = img.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (img[j] < img[i]) ++smaller;
    }
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

Permutation lehmer_unrank(std::uint64_t rank, std::size_t n) {
  std::vector<std::uint64_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t base = n - i;
    digits[i] = rank % base;
    rank /= base;
  }
  std::vector<Label> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Label>(i + 1);
  std::vector<Label> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return Permutation(std::move(images));
}

CayleySearchResult mcd_exact(const Permutation& p, const CostMatrix& raw,
                             std::size_t limit) {
  guard(p.size(), limit, "mcd_exact");
  if (p.size() != raw.size()) throw ContractError("mcd_exact: size mismatch");
  const auto moves = finite_moves(raw);
  const Permutation id = Permutation::identity(p.size());
  const Settled s = dijkstra(id, p, moves,
                             [](const Permutation&, const Transposition&) {
                               return true;
                             });
  CayleySearchResult out{p, s.dist[lehmer_rank(p)], {}, s.settled};
  // Backtracking from p meets the last-applied move first, which is the
  // leftmost factor of the written product.
  if (is_finite(out.min_cost)) out.witness = Decomposition(backtrack(s, id, p, moves));
  return out;
}

Cost transposition_min_cost_exact(Label a, Label b, const CostMatrix& raw,
                                  std::size_t limit) {
  return mcd_exact(Permutation::from_transposition(raw.size(), Transposition(a, b)),
                   raw, limit)
      .min_cost;
}

CayleySearchResult mld_exact_search(const Permutation& p,
                                    const CostMatrix& costs,
                                    std::size_t limit) {
  guard(p.size(), limit, "mld_exact_search");
  if (p.size() != costs.size()) {
    throw ContractError("mld_exact_search: size mismatch");
  }
  const auto moves = finite_moves(costs);
  const Permutation id = Permutation::identity(p.size());
  // (a b) q has one more cycle than q exactly when a and b share a cycle of q.
  const auto splits = [](const Permutation& q, const Transposition& t) {
    for (Label x = q(t.a()); x != t.a(); x = q(x)) {
      if (x == t.b()) return true;
    }
    return false;
  };
  const Settled s = dijkstra(p, id, moves, splits);
  CayleySearchResult out{p, s.dist[lehmer_rank(id)], {}, s.settled};
  if (is_finite(out.min_cost)) {
    // Moves applied to p in order t_m, ..., t_1 reach the identity, so that
    // order is the written product.
    auto seq = backtrack(s, p, id, moves);
    std::reverse(seq.begin(), seq.end());
    out.witness = Decomposition(std::move(seq));
  }
  return out;
}

std::vector<TreeEdge> prufer_tree(const std::vector<std::size_t>& sequence,
                                  std::size_t k) {
  if (k < 2) return {};
  if (sequence.size() != k - 2) {
    throw ContractError("Prüfer sequence must have length k - 2");
  }
  std::vector<std::size_t> degree(k, 1);
  for (std::size_t v : sequence) {
    if (v >= k) throw ContractError("Prüfer entry out of range");
    ++degree[v];
  }
  std::vector<TreeEdge> edges;
  for (std::size_t v : sequence) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, v});
    --degree[leaf];
    --degree[v];
  }
  std::size_t u = 0;
  while (degree[u] != 1) ++u;
  std::size_t w = u + 1;
  while (degree[w] != 1) ++w;
  edges.push_back({u, w});
  return edges;
}

bool is_non_crossing(const std::vector<TreeEdge>& tree) {
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto a = std::min(tree[i].u, tree[i].v);
    const auto b = std::max(tree[i].u, tree[i].v);
    for (std::size_t j = i + 1; j < tree.size(); ++j) {
      const auto c = std::min(tree[j].u, tree[j].v);
      const auto d = std::max(tree[j].u, tree[j].v);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

namespace {

struct TreeConverter {
  const Cycle& cycle;
  std::vector<std::vector<bool>> adj;

  // Positions of the component containing `start` within [lo, hi], ignoring
  // the edge (cut_u, cut_v).
  std::vector<bool> component(std::size_t start, std::size_t lo, std::size_t hi,
                              std::size_t cut_u, std::size_t cut_v) const {
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = lo; y <= hi; ++y) {
        if (!adj[x][y] || seen[y]) continue;
        if ((x == cut_u && y == cut_v) || (x == cut_v && y == cut_u)) continue;
        seen[y] = true;
        stack.push_back(y);
      }
    }
    return seen;
  }

  // (c_i ... c_j) = (c_{s+1} ... c_r)(c_i c_r)(c_r ... c_j)(c_i ... c_s),
  // with r the largest neighbour of i and {i..s} the side of i once (i r)
  // is removed.
  void emit(std::size_t i, std::size_t j, Decomposition& out) const {
    if (i >= j) return;
    std::size_t r = i;
    for (std::size_t y = i + 1; y <= j; ++y) {
      if (adj[i][y]) r = y;
    }
    if (r == i) throw ContractError("tree is not connected on an interval");
    const auto side = component(i, i, j, i, r);
    std::size_t s = i;
    while (s + 1 <= j && side[s + 1]) ++s;
    for (std::size_t y = s + 1; y <= j; ++y) {
      if (side[y]) throw ContractError("tree does not split into intervals");
    }
    if (s >= r) throw ContractError("tree does not split into intervals");
    emit(s + 1, r, out);
    out.append(Transposition(cycle[i], cycle[r]));
    emit(r, j, out);
    emit(i, s, out);
  }
};

}  // namespace

Decomposition tree_to_decomposition(const Cycle& cycle,
                                    const std::vector<TreeEdge>& tree) {
  const std::size_t k = cycle.size();
  if (tree.size() + 1 != k && !(k == 1 && tree.empty())) {
    throw ContractError("tree must have k - 1 edges");
  }
  TreeConverter conv{cycle, std::vector<std::vector<bool>>(k, std::vector<bool>(k))};
  for (const TreeEdge& e : tree) {
    conv.adj[e.u][e.v] = true;
    conv.adj[e.v][e.u] = true;
  }
  Decomposition out;
  conv.emit(0, k - 1, out);
  return out;
}

EnumerationResult mld_exact_enumeration(const Cycle& cycle,
                                        const CostMatrix& phi_star,
                                        std::size_t limit) {
  const std::size_t k = cycle.size();
  guard(k, limit, "mld_exact_enumeration");
  EnumerationResult out;
  if (k == 1) {
    out.min_cost = 0;
    out.trees = out.non_crossing = 1;
    return out;
  }
  std::vector<std::size_t> seq(k - 2, 0);
  while (true) {
    const auto tree = prufer_tree(seq, k);
    ++out.trees;
    if (is_non_crossing(tree)) {
      ++out.non_crossing;
      Cost c = 0;
      for (const TreeEdge& e : tree) c += phi_star(cycle[e.u], cycle[e.v]);
      if (c < out.min_cost) {
        out.min_cost = c;
        out.witness = tree_to_decomposition(cycle, tree);
      }
    }
    // Odometer increment over [0, k)^(k-2).
    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == k) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return out;
}

}  // namespace permsort
