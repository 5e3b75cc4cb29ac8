#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "indcount/graph.hpp"

namespace indcount {

__extension__ typedef __int128 Int128;

/// Exact non-negative rational, always stored in lowest terms with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiplication in 128 bits cannot overflow for 64-bit operands.
    const Int128 lhs = static_cast<Int128>(a.num) * b.den;
    const Int128 rhs = static_cast<Int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
};

/// (k+1)-uniform hypergraph on 0..n-1. Edges are stored sorted; the incidence
/// index lists, for every vertex, the indices of the edges containing it.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws InvalidInput if k < 1, an edge does not have exactly k+1 distinct
  /// in-range vertices, or two edges are equal as sets.
  static Hypergraph from_edges(std::size_t n, std::size_t k,
                               std::span<const std::vector<Vertex>> edges);
  static Hypergraph from_graph(const Graph& g);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t edge_size() const noexcept { return k_ + 1; }
  bool is_graph() const noexcept { return k_ == 1; }

  const std::vector<Vertex>& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<std::vector<Vertex>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& incident(Vertex v) const { return incidence_[v]; }
  std::size_t degree(Vertex v) const { return incidence_[v].size(); }

  /// Requires k == 1.
  Graph to_graph() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 1;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

inline Hypergraph hypergraph_from_edges(std::size_t n, std::size_t k,
                                        std::span<const std::vector<Vertex>> edges) {
  return Hypergraph::from_edges(n, k, edges);
}

/// True iff any two distinct edges share at most one vertex.
bool is_linear(const Hypergraph& h);

struct DegreeStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 1;
  Rational t_avg;  // (k+1) m / n
  std::size_t t_max = 0;
};

/// Requires n >= 1.
DegreeStats degree_stats(const Hypergraph& h);
DegreeStats degree_stats(const Graph& g);

struct InducedSubhypergraph {
  Hypergraph hypergraph;
  std::vector<Vertex> original;  // sorted; vertex i maps to original[i]
};

/// Keeps exactly the edges lying entirely inside `keep`, relabelled densely.
InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, std::span<const Vertex> keep);

/// Vertex-disjoint union; requires equal k.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

}  // namespace indcount
