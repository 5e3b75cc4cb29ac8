#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "indcount/counting.hpp"
#include "indcount/graph.hpp"
#include "indcount/hypergraph.hpp"

namespace indcount {

struct AlphaResult {
  std::size_t alpha = 0;
  std::vector<Vertex> witness;  // ascending; |witness| == alpha
  bool exact = false;           // false for greedy (maximal, not maximum)
};

/// True iff no edge of h lies entirely inside `set`.
bool is_independent(const Hypergraph& h, std::span<const Vertex> set);
bool is_independent(const Graph& g, std::span<const Vertex> set);

/// Maximum independent set by branch and bound. Branches on a maximum-degree
/// vertex of the residual instance; the incumbent starts from a greedy
/// solution and subtrees are cut with |chosen| + |free| - (disjoint residual
/// edges) <= incumbent.
AlphaResult alpha_exact(const Hypergraph& h, std::uint64_t node_budget = kDefaultNodeBudget);
AlphaResult alpha_exact(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Decides alpha(h) >= target, stopping as soon as a witness is found.
bool has_independent_set_of_size(const Hypergraph& h, std::size_t target,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

/// Random-order greedy: scan a seeded permutation, keep a vertex unless it
/// would complete an edge. Always maximal.
AlphaResult greedy_independent_set(const Hypergraph& h, std::uint64_t seed);
AlphaResult greedy_independent_set(const Graph& g, std::uint64_t seed);

/// ln t - 1. Throws InvalidInput for t <= 0. May be negative.
double shearer_f(double t);

/// c (ln t)^(1/k). Throws InvalidInput for t <= 1, k == 0 or c <= 0.
double dlr_f(double t, std::size_t k, double c);

}  // namespace indcount
