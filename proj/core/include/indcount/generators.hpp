#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indcount/graph.hpp"
#include "indcount/hypergraph.hpp"

namespace indcount {

struct TriangleFreeProcessStats {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t steps = 0;                // edges added, equals the final edge count
  std::size_t initial_open_pairs = 0;   // n(n-1)/2
  std::size_t pairs_closed = 0;         // open pairs removed because they would close a triangle
  std::size_t max_degree = 0;
};

struct TriangleFreeProcessRun {
  Graph graph;
  TriangleFreeProcessStats stats;
};

/// Random triangle-free process: starting from the empty graph, repeatedly add
/// a uniformly random open pair (a non-edge whose addition keeps the graph
/// triangle-free) until none remain. The result is a maximal triangle-free
/// graph and depends only on (n, seed).
TriangleFreeProcessRun run_triangle_free_process(std::size_t n, std::uint64_t seed);
Graph triangle_free_process(std::size_t n, std::uint64_t seed);

/// Projection of a blow-up back onto the original graph. Blown-up vertex i
/// belongs to the fiber of original vertex i / r.
struct BlowupMap {
  std::size_t r = 1;
  std::size_t original_vertices = 0;
  double raw_r = 1.0;  // real-valued replication factor before rounding (== r when chosen by caller)

  Vertex operator()(Vertex i) const noexcept { return static_cast<Vertex>(i / r); }
  std::size_t blown_up_vertices() const noexcept { return r * original_vertices; }
  std::vector<Vertex> fiber(Vertex v) const;
  /// f(S): sorted, deduplicated image of a vertex set.
  std::vector<Vertex> image(const std::vector<Vertex>& s) const;
};

struct Blowup {
  Graph graph;
  BlowupMap map;
};

/// Replaces each vertex by r pairwise non-adjacent copies; copies of u and v
/// are completely joined iff uv is an edge. Requires r >= 1.
Blowup blowup(const Graph& g, std::size_t r);

/// blowup() with r = max(1, round(ln(n) / 2)). Requires n >= 2.
Blowup paper_blowup(const Graph& g);
std::size_t preset_replication_factor(std::size_t n);

/// Linear (k+1)-uniform hypergraph with exactly m edges, built by drawing
/// uniform random (k+1)-sets and rejecting any that shares two or more
/// vertices with an accepted edge. Throws GenerationFailure after
/// `max_attempts` consecutive rejections (0 selects 1000*m).
Hypergraph random_linear_hypergraph(std::size_t n, std::size_t k, std::size_t m,
                                    std::uint64_t seed, std::size_t max_attempts = 0);

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

/// Each (k+1)-subset of [n] becomes an edge independently with the given
/// probability. Intended for small n (enumerates all subsets).
Hypergraph random_uniform_hypergraph(std::size_t n, std::size_t k, double edge_probability,
                                     std::uint64_t seed);

struct SampleOutcome {
  std::vector<Vertex> selected;  // ascending
  std::size_t n_prime = 0;
  std::size_t m_prime = 0;  // degree sum of the induced subhypergraph
};

/// Keeps each vertex independently with probability p.
SampleOutcome sample_vertices(const Hypergraph& h, double p, std::uint64_t seed);

}  // namespace indcount
