#include "indcount/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "indcount/errors.hpp"

namespace indcount {

Graph Graph::from_edges(std::size_t n, std::span<const VertexPair> edges) {
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.adjacency_.assign(n * g.words_, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(u));
    }
    if (g.adjacent(u, v)) {
      throw InvalidInput("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    g.adjacency_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.adjacency_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++g.m_;
  }
  return g;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t w = r[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(64 * i + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_triangle_free(const Graph& g) {
  const std::size_t words = g.words_per_row();
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto ru = g.row(u);
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto rv = g.row(v);
      for (std::size_t i = 0; i < words; ++i) {
        if (ru[i] & rv[i]) return false;
      }
    }
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.original.assign(keep.begin(), keep.end());
  std::sort(out.original.begin(), out.original.end());
  if (std::adjacent_find(out.original.begin(), out.original.end()) != out.original.end()) {
    throw InvalidInput("induced_subgraph: repeated vertex");
  }
  if (!out.original.empty() && out.original.back() >= g.vertex_count()) {
    throw InvalidInput("induced_subgraph: vertex out of range");
  }
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (std::size_t j = i + 1; j < out.original.size(); ++j) {
      if (g.adjacent(out.original[i], out.original[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  out.graph = Graph::from_edges(out.original.size(), edges);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle_graph needs n >= 3");
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

}  // namespace indcount
