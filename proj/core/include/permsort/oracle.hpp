#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "permsort/cost_matrix.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

inline constexpr std::size_t kDefaultSearchLimit = 7;
inline constexpr std::size_t kDefaultEnumerationLimit = 8;

struct CayleySearchResult {
  Permutation target;
  Cost min_cost = kInfinity;
  // Written order; empty when min_cost is infinite.
  Decomposition witness;
  std::size_t states_settled = 0;
};

// Rank of p among all permutations of its size in lexicographic order.
std::uint64_t lehmer_rank(const Permutation& p);
Permutation lehmer_unrank(std::uint64_t rank, std::size_t n);

// Exact minimum cost decomposition by Dijkstra over the Cayley graph of S_n.
// Throws SizeGuardError if n > limit.
CayleySearchResult mcd_exact(const Permutation& p, const CostMatrix& raw,
                             std::size_t limit = kDefaultSearchLimit);

// Exact minimum cost of any decomposition of (a b).
Cost transposition_min_cost_exact(Label a, Label b, const CostMatrix& raw,
                                  std::size_t limit = kDefaultSearchLimit);

// Exact minimum cost among decompositions of minimum length, searched
// without reference to cycle structure beyond "each step splits a cycle".
CayleySearchResult mld_exact_search(const Permutation& p,
                                    const CostMatrix& costs,
                                    std::size_t limit = kDefaultSearchLimit);

struct TreeEdge {
  std::size_t u;
  std::size_t v;
};

// Labeled spanning tree of k vertices from a Prüfer sequence (length k - 2,
// entries in [0, k)).
std::vector<TreeEdge> prufer_tree(const std::vector<std::size_t>& sequence,
                                  std::size_t k);

// No two edges cross when the vertices 0..k-1 sit in order on a circle.
bool is_non_crossing(const std::vector<TreeEdge>& tree);

// Minimum-length decomposition of `cycle` whose transpositions are the edges
// of a non-crossing tree on its positions. Throws ContractError if the tree
// has no such decomposition.
Decomposition tree_to_decomposition(const Cycle& cycle,
                                    const std::vector<TreeEdge>& tree);

struct EnumerationResult {
  Cost min_cost = kInfinity;
  Decomposition witness;
  std::size_t trees = 0;
  std::size_t non_crossing = 0;
};

// Enumerates every spanning tree on the cycle's positions, converts each
// non-crossing one into a decomposition and returns the cheapest.
// Throws SizeGuardError if k > limit.
EnumerationResult mld_exact_enumeration(const Cycle& cycle,
                                        const CostMatrix& phi_star,
                                        std::size_t limit = kDefaultEnumerationLimit);

}  // namespace permsort
