#include "indcount/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "indcount/errors.hpp"
#include "indcount/rng.hpp"

namespace indcount {
namespace {

// Open pairs of the triangle-free process, kept in a dense array with a
// position index so a uniform pick and a removal are both O(1).
class OpenPairs {
 public:
  explicit OpenPairs(std::size_t n) : n_(n) {
    const std::size_t total = n * (n - 1) / 2;
    if (total >= kAbsent) throw InvalidInput("triangle-free process: n too large");
    pairs_.reserve(total);
    position_.resize(total);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        position_[index(u, v)] = static_cast<std::uint32_t>(pairs_.size());
        pairs_.push_back((std::uint64_t{u} << 32) | v);
      }
    }
  }

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  VertexPair at(std::size_t i) const {
    return {static_cast<Vertex>(pairs_[i] >> 32), static_cast<Vertex>(pairs_[i] & 0xffffffffU)};
  }

  // Returns true if the pair was open.
  bool remove(Vertex a, Vertex b) {
    const std::size_t u = std::min(a, b);
    const std::size_t v = std::max(a, b);
    const std::size_t idx = index(u, v);
    const std::uint32_t pos = position_[idx];
    if (pos == kAbsent) return false;
    const std::uint64_t last = pairs_.back();
    pairs_[pos] = last;
    position_[index(last >> 32, last & 0xffffffffU)] = pos;
    pairs_.pop_back();
    position_[idx] = kAbsent;
    return true;
  }

 private:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

  std::size_t index(std::size_t u, std::size_t v) const noexcept {
    return u * n_ - u * (u + 1) / 2 + (v - u - 1);
  }

  std::size_t n_;
  std::vector<std::uint64_t> pairs_;
  std::vector<std::uint32_t> position_;
};

}  // namespace

TriangleFreeProcessRun run_triangle_free_process(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("triangle-free process needs n >= 1");
  TriangleFreeProcessRun run;
  run.stats.n = n;
  run.stats.seed = seed;
  run.stats.initial_open_pairs = n * (n - 1) / 2;

  Rng rng(seed);
  OpenPairs open(n);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<VertexPair> edges;

  while (!open.empty()) {
    const auto [u, v] = open.at(static_cast<std::size_t>(rng.uniform_below(open.size())));
    open.remove(u, v);
    for (Vertex w : adj[u]) run.stats.pairs_closed += open.remove(v, w) ? 1 : 0;
    for (Vertex w : adj[v]) run.stats.pairs_closed += open.remove(u, w) ? 1 : 0;
    adj[u].push_back(v);
    adj[v].push_back(u);
    edges.emplace_back(u, v);
  }

  run.stats.steps = edges.size();
  for (const auto& a : adj) run.stats.max_degree = std::max(run.stats.max_degree, a.size());
  run.graph = Graph::from_edges(n, edges);
  return run;
}

Graph triangle_free_process(std::size_t n, std::uint64_t seed) {
  return run_triangle_free_process(n, seed).graph;
}

std::vector<Vertex> BlowupMap::fiber(Vertex v) const {
  std::vector<Vertex> out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = static_cast<Vertex>(v * r + i);
  return out;
}

std::vector<Vertex> BlowupMap::image(const std::vector<Vertex>& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex i : s) out.push_back((*this)(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Blowup blowup(const Graph& g, std::size_t r) {
  if (r < 1) throw InvalidInput("blow-up factor r must be >= 1");
  Blowup out;
  out.map.r = r;
  out.map.original_vertices = g.vertex_count();
  out.map.raw_r = static_cast<double>(r);
  std::vector<VertexPair> edges;
  edges.reserve(g.edge_count() * r * r);
  for (auto [u, v] : g.edges()) {
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        edges.emplace_back(static_cast<Vertex>(u * r + a), static_cast<Vertex>(v * r + b));
      }
    }
  }
  out.graph = Graph::from_edges(g.vertex_count() * r, edges);
  return out;
}

std::size_t preset_replication_factor(std::size_t n) {
  if (n < 2) throw InvalidInput("blow-up preset needs n >= 2");
  const double raw = 0.5 * std::log(static_cast<double>(n));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(raw)));
}

Blowup paper_blowup(const Graph& g) {
  auto out = blowup(g, preset_replication_factor(g.vertex_count()));
  out.map.raw_r = 0.5 * std::log(static_cast<double>(g.vertex_count()));
  return out;
}

Hypergraph random_linear_hypergraph(std::size_t n, std::size_t k, std::size_t m,
                                    std::uint64_t seed, std::size_t max_attempts) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (k + 1 > n) throw InvalidInput("edge size k+1 exceeds n");
  if (max_attempts == 0) max_attempts = std::max<std::size_t>(1000 * m, 1000);

  Rng rng(seed);
  const std::size_t s = k + 1;
  std::unordered_set<std::uint64_t> covered;
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(m);
  std::vector<Vertex> draw;
  std::size_t rejections = 0;

  while (edges.size() < m) {
    // Floyd's sampling of a uniform s-subset of [0, n).
    draw.clear();
    for (std::size_t j = n - s; j < n; ++j) {
      const auto t = static_cast<Vertex>(rng.uniform_below(j + 1));
      if (std::find(draw.begin(), draw.end(), t) == draw.end()) {
        draw.push_back(t);
      } else {
        draw.push_back(static_cast<Vertex>(j));
      }
    }
    std::sort(draw.begin(), draw.end());

    bool ok = true;
    for (std::size_t a = 0; a < s && ok; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        if (covered.contains((std::uint64_t{draw[a]} << 32) | draw[b])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      if (++rejections >= max_attempts) {
        throw GenerationFailure("random_linear_hypergraph: " + std::to_string(max_attempts) +
                                " consecutive rejections after placing " +
                                std::to_string(edges.size()) + " of " + std::to_string(m) +
                                " edges");
      }
      continue;
    }
    rejections = 0;
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        covered.insert((std::uint64_t{draw[a]} << 32) | draw[b]);
      }
    }
    edges.push_back(draw);
  }
  return Hypergraph::from_edges(n, k, edges);
}

Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InvalidInput("edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<VertexPair> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(edge_probability)) {
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Hypergraph random_uniform_hypergraph(std::size_t n, std::size_t k, double edge_probability,
                                     std::uint64_t seed) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InvalidInput("edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  const std::size_t s = k + 1;
  if (s <= n) {
    std::vector<Vertex> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = static_cast<Vertex>(i);
    while (true) {
      if (rng.bernoulli(edge_probability)) edges.push_back(comb);
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i > 0 && comb[i - 1] == n - s + (i - 1)) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return Hypergraph::from_edges(n, k, edges);
}

SampleOutcome sample_vertices(const Hypergraph& h, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("sampling probability must lie in [0, 1]");
  Rng rng(seed);
  SampleOutcome out;
  std::vector<char> chosen(h.vertex_count(), 0);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (rng.bernoulli(p)) {
      chosen[v] = 1;
      out.selected.push_back(v);
    }
  }
  out.n_prime = out.selected.size();
  std::size_t inside = 0;
  for (const auto& e : h.edges()) {
    inside += std::all_of(e.begin(), e.end(), [&](Vertex v) { return chosen[v] != 0; }) ? 1 : 0;
  }
  out.m_prime = h.edge_size() * inside;
  return out;
}

}  // namespace indcount
