#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace indcount {

using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with one adjacency bit row per
/// vertex. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph with exactly the given edges. Throws InvalidInput on an
  /// out-of-range endpoint, a self-loop, or a repeated edge (in either
  /// orientation).
  static Graph from_edges(std::size_t n, std::span<const VertexPair> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (row(u)[v >> 6] >> (v & 63)) & 1U;
  }
  std::size_t degree(Vertex v) const noexcept;
  std::size_t max_degree() const noexcept;

  /// Adjacency bits of v; bit u of word u/64 is set iff u ~ v.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {adjacency_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  std::vector<Vertex> neighbors(Vertex v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<VertexPair> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

inline Graph graph_from_edges(std::size_t n, std::span<const VertexPair> edges) {
  return Graph::from_edges(n, edges);
}

/// True iff no three vertices are pairwise adjacent.
bool is_triangle_free(const Graph& g);

/// Induced subgraph on `keep` (any order, no repeats). Vertex i of the result
/// is `original[i]` in g; `original` is sorted ascending.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Disjoint union: vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Small named families, used by tests and the generator CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

}  // namespace indcount
