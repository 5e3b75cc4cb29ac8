#pragma once

#include <cstddef>
#include <cstdint>

#include "indcount/big_count.hpp"
#include "indcount/graph.hpp"
#include "indcount/hypergraph.hpp"

namespace indcount {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct CountOptions {
  /// Branch nodes allowed before BudgetExceeded is thrown.
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Memo entries kept before the cache is cleared wholesale. Entries are
  /// keyed by the exact residual instance, so eviction only costs time.
  std::size_t memo_capacity = std::size_t{1} << 20;
};

struct CountStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_clears = 0;
};

/// Number of independent sets of h, the empty set included.
///
/// Graphs (k = 1) use branch-and-reduce on a maximum-degree vertex,
/// i(G) = i(G - v) + i(G - N[v]), with isolated-vertex peeling, component
/// factorisation, and a memo keyed by the remaining vertex subset.
///
/// Hypergraphs branch the same way but "include v" shrinks every edge through
/// v; edges shrunk to one vertex force that vertex out (unit propagation).
///
/// Instances are limited to 512 vertices; practical limits are far lower
/// (about 60 graph vertices or 40 hypergraph vertices, structure-dependent).
/// Throws BudgetExceeded rather than ever returning an inexact value.
BigCount count_exact(const Hypergraph& h, const CountOptions& options = {},
                     CountStats* stats = nullptr);
BigCount count_exact(const Graph& g, const CountOptions& options = {},
                     CountStats* stats = nullptr);

inline constexpr std::size_t kBruteForceMaxVertices = 25;

/// Enumerates all 2^n vertex subsets. Throws InvalidInput when n > 25.
BigCount count_brute_force(const Hypergraph& h);
BigCount count_brute_force(const Graph& g);

}  // namespace indcount
