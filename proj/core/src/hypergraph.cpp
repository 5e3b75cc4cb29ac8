#include "indcount/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "indcount/errors.hpp"

namespace indcount {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

Hypergraph Hypergraph::from_edges(std::size_t n, std::size_t k,
                                  std::span<const std::vector<Vertex>> edges) {
  if (k < 1) throw InvalidInput("uniformity parameter k must be >= 1");
  Hypergraph h;
  h.n_ = n;
  h.k_ = k;
  h.edges_.reserve(edges.size());
  h.incidence_.assign(n, {});
  std::set<std::vector<Vertex>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto sorted = edges[e];
    if (sorted.size() != k + 1) {
      throw InvalidInput("edge " + std::to_string(e) + " has " + std::to_string(sorted.size()) +
                         " vertices, expected " + std::to_string(k + 1));
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("edge " + std::to_string(e) + " repeats a vertex");
    }
    if (sorted.back() >= n) {
      throw InvalidInput("edge " + std::to_string(e) + " has a vertex outside [0, " +
                         std::to_string(n) + ")");
    }
    if (!seen.insert(sorted).second) {
      throw InvalidInput("duplicate edge " + std::to_string(e));
    }
    for (Vertex v : sorted) h.incidence_[v].push_back(h.edges_.size());
    h.edges_.push_back(std::move(sorted));
  }
  return h;
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return from_edges(g.vertex_count(), 1, edges);
}

Graph Hypergraph::to_graph() const {
  if (k_ != 1) throw InvalidInput("hypergraph is not 2-uniform");
  std::vector<VertexPair> pairs;
  pairs.reserve(edges_.size());
  for (const auto& e : edges_) pairs.emplace_back(e[0], e[1]);
  return Graph::from_edges(n_, pairs);
}

bool is_linear(const Hypergraph& h) {
  // Two edges share >= 2 vertices iff some vertex pair is covered twice.
  std::unordered_set<std::uint64_t> pairs;
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const std::uint64_t key = (std::uint64_t{e[i]} << 32) | e[j];
        if (!pairs.insert(key).second) return false;
      }
    }
  }
  return true;
}

DegreeStats degree_stats(const Hypergraph& h) {
  if (h.vertex_count() == 0) throw InvalidInput("degree_stats needs n >= 1");
  DegreeStats s;
  s.n = h.vertex_count();
  s.m = h.edge_count();
  s.k = h.k();
  s.t_avg = Rational::make(static_cast<std::int64_t>((h.k() + 1) * h.edge_count()),
                           static_cast<std::int64_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) s.t_max = std::max(s.t_max, h.degree(v));
  return s;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.vertex_count() == 0) throw InvalidInput("degree_stats needs n >= 1");
  DegreeStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.k = 1;
  s.t_avg = Rational::make(static_cast<std::int64_t>(2 * g.edge_count()),
                           static_cast<std::int64_t>(g.vertex_count()));
  s.t_max = g.max_degree();
  return s;
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, std::span<const Vertex> keep) {
  InducedSubhypergraph out;
  out.original.assign(keep.begin(), keep.end());
  std::sort(out.original.begin(), out.original.end());
  if (std::adjacent_find(out.original.begin(), out.original.end()) != out.original.end()) {
    throw InvalidInput("induced_subhypergraph: repeated vertex");
  }
  if (!out.original.empty() && out.original.back() >= h.vertex_count()) {
    throw InvalidInput("induced_subhypergraph: vertex out of range");
  }
  constexpr Vertex kDropped = ~Vertex{0};
  std::vector<Vertex> relabel(h.vertex_count(), kDropped);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    relabel[out.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> edges;
  for (const auto& e : h.edges()) {
    std::vector<Vertex> mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) {
      if (relabel[v] == kDropped) break;
      mapped.push_back(relabel[v]);
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  out.hypergraph = Hypergraph::from_edges(out.original.size(), h.k(), edges);
  return out;
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  if (a.k() != b.k()) throw InvalidInput("disjoint_union: uniformities differ");
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (auto e : b.edges()) {
    for (auto& v : e) v += shift;
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_edges(a.vertex_count() + b.vertex_count(), a.k(), edges);
}

}  // namespace indcount
