#include "indcount/counting.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "indcount/detail/vertex_mask.hpp"
#include "indcount/errors.hpp"

namespace indcount {
namespace {

using detail::VertexMask;

mpz_class pow2(std::size_t e) {
  mpz_class v;
  mpz_setbit(v.get_mpz_t(), e);
  return v;
}

class NodeMeter {
 public:
  NodeMeter(const CountOptions& options, CountStats& stats) : options_(options), stats_(stats) {}

  void tick() {
    if (++stats_.nodes > options_.node_budget) {
      throw BudgetExceeded("count_exact: node budget of " + std::to_string(options_.node_budget) +
                           " exceeded");
    }
  }

  template <typename Map>
  void make_room(Map& memo) {
    if (memo.size() >= options_.memo_capacity) {
      memo.clear();
      ++stats_.memo_clears;
    }
  }

  void hit() { ++stats_.memo_hits; }

 private:
  const CountOptions& options_;
  CountStats& stats_;
};

// i(G) by branching on a maximum-degree vertex, with memo keyed by the exact
// set of remaining original vertices.
template <std::size_t W>
class GraphCounter {
 public:
  using Mask = VertexMask<W>;

  GraphCounter(const Graph& g, NodeMeter& meter) : meter_(meter), adj_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (Vertex u : g.neighbors(v)) adj_[v].set(u);
    }
    all_ = Mask::first_n(g.vertex_count());
  }

  mpz_class count() { return count(all_); }

 private:
  mpz_class count(Mask rest) {
    meter_.tick();
    Mask isolated;
    rest.for_each([&](std::size_t v) {
      if (!adj_[v].intersects(rest)) isolated.set(v);
    });
    rest -= isolated;
    mpz_class result = pow2(isolated.count());
    while (!rest.empty()) {
      const Mask comp = component(rest.first(), rest);
      rest -= comp;
      result *= count_connected(comp);
    }
    return result;
  }

  Mask component(std::size_t start, const Mask& within) const {
    Mask comp = Mask::single(start);
    Mask frontier = comp;
    while (!frontier.empty()) {
      Mask next;
      frontier.for_each([&](std::size_t u) { next |= adj_[u]; });
      next &= within;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  // `comp` is connected with at least two vertices.
  mpz_class count_connected(const Mask& comp) {
    if (comp.count() == 2) return 3;
    if (auto it = memo_.find(comp); it != memo_.end()) {
      meter_.hit();
      return it->second;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    comp.for_each([&](std::size_t v) {
      const std::size_t d = (adj_[v] & comp).count();
      if (d > best) {
        best = d;
        pivot = v;
      }
    });
    Mask without = comp;
    without.reset(pivot);
    mpz_class result = count(without);
    result += count(without - adj_[pivot]);
    meter_.make_room(memo_);
    memo_.emplace(comp, result);
    return result;
  }

  NodeMeter& meter_;
  std::vector<Mask> adj_;
  Mask all_;
  std::unordered_map<Mask, mpz_class, detail::VertexMaskHash<W>> memo_;
};

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : key) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

// Residual-instance counter for (k+1)-uniform hypergraphs. A residual
// instance is a vertex set plus constraint sets ("not all of these"), each a
// subset of the vertex set; including a vertex shrinks the constraints
// through it.
template <std::size_t W>
class HypergraphCounter {
 public:
  using Mask = VertexMask<W>;
  using Edges = std::vector<Mask>;

  HypergraphCounter(const Hypergraph& h, NodeMeter& meter) : meter_(meter) {
    all_ = Mask::first_n(h.vertex_count());
    for (const auto& e : h.edges()) {
      Mask m;
      for (Vertex v : e) m.set(v);
      edges_.push_back(m);
    }
  }

  mpz_class count() { return count(all_, edges_); }

 private:
  mpz_class count(Mask rest, Edges edges) {
    meter_.tick();
    // Unit propagation: a one-vertex constraint excludes that vertex, which
    // in turn satisfies every constraint through it.
    while (true) {
      Mask excluded;
      for (const auto& e : edges) {
        const std::size_t size = e.count();
        if (size == 0) return 0;
        if (size == 1) excluded |= e;
      }
      if (excluded.empty()) break;
      rest -= excluded;
      std::erase_if(edges, [&](const Mask& e) { return e.intersects(excluded); });
    }
    Mask covered;
    for (const auto& e : edges) covered |= e;
    mpz_class result = pow2((rest - covered).count());
    rest = covered;
    if (edges.empty()) return result;

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    while (!edges.empty()) {
      // Grow one component from the first constraint.
      Mask comp = edges.front();
      std::vector<char> in(edges.size(), 0);
      in[0] = 1;
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if (!in[i] && edges[i].intersects(comp)) {
            in[i] = 1;
            comp |= edges[i];
            grew = true;
          }
        }
      }
      Edges part;
      Edges remaining;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        (in[i] ? part : remaining).push_back(edges[i]);
      }
      result *= count_connected(comp, part);
      edges = std::move(remaining);
    }
    return result;
  }

  // edges: sorted, unique, each of size >= 2, union == rest, connected.
  mpz_class count_connected(const Mask& rest, const Edges& edges) {
    std::vector<std::uint64_t> key;
    key.reserve(W * (edges.size() + 1));
    key.insert(key.end(), rest.words.begin(), rest.words.end());
    for (const auto& e : edges) key.insert(key.end(), e.words.begin(), e.words.end());
    if (auto it = memo_.find(key); it != memo_.end()) {
      meter_.hit();
      return it->second;
    }

    std::vector<std::size_t> degree(Mask::kCapacity, 0);
    for (const auto& e : edges) e.for_each([&](std::size_t v) { ++degree[v]; });
    std::size_t pivot = rest.first();
    rest.for_each([&](std::size_t v) {
      if (degree[v] > degree[pivot]) pivot = v;
    });

    Mask without = rest;
    without.reset(pivot);
    Edges excluded_edges;
    Edges included_edges;
    excluded_edges.reserve(edges.size());
    included_edges.reserve(edges.size());
    for (const auto& e : edges) {
      if (e.test(pivot)) {
        Mask shrunk = e;
        shrunk.reset(pivot);
        included_edges.push_back(shrunk);
      } else {
        excluded_edges.push_back(e);
        included_edges.push_back(e);
      }
    }
    mpz_class result = count(without, std::move(excluded_edges));
    result += count(without, std::move(included_edges));
    meter_.make_room(memo_);
    memo_.emplace(std::move(key), result);
    return result;
  }

  NodeMeter& meter_;
  Mask all_;
  Edges edges_;
  std::unordered_map<std::vector<std::uint64_t>, mpz_class, WordsHash> memo_;
};

[[noreturn]] void too_large(std::size_t n) {
  throw BudgetExceeded("count_exact: " + std::to_string(n) + " vertices exceeds the " +
                       std::to_string(detail::kMaxMaskVertices) + "-vertex engine limit");
}

}  // namespace

BigCount count_exact(const Graph& g, const CountOptions& options, CountStats* stats) {
  CountStats local;
  NodeMeter meter(options, stats ? *stats : local);
  mpz_class result = 1;
  if (g.vertex_count() == 0) return BigCount(result);
  const bool ok = detail::dispatch_mask_width(g.vertex_count(), [&]<std::size_t W>() {
    GraphCounter<W> counter(g, meter);
    result = counter.count();
  });
  if (!ok) too_large(g.vertex_count());
  return BigCount(std::move(result));
}

BigCount count_exact(const Hypergraph& h, const CountOptions& options, CountStats* stats) {
  if (h.is_graph()) return count_exact(h.to_graph(), options, stats);
  CountStats local;
  NodeMeter meter(options, stats ? *stats : local);
  mpz_class result = 1;
  if (h.vertex_count() == 0) return BigCount(result);
  const bool ok = detail::dispatch_mask_width(h.vertex_count(), [&]<std::size_t W>() {
    HypergraphCounter<W> counter(h, meter);
    result = counter.count();
  });
  if (!ok) too_large(h.vertex_count());
  return BigCount(std::move(result));
}

BigCount count_brute_force(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (n > kBruteForceMaxVertices) {
    throw InvalidInput("count_brute_force supports at most " +
                       std::to_string(kBruteForceMaxVertices) + " vertices, got " +
                       std::to_string(n));
  }
  std::vector<std::uint32_t> masks;
  masks.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (Vertex v : e) m |= std::uint32_t{1} << v;
    masks.push_back(m);
  }
  std::uint64_t total = 0;
  const std::uint32_t limit = n == 32 ? 0 : (std::uint32_t{1} << n);
  for (std::uint32_t s = 0;; ++s) {
    bool independent = true;
    for (auto m : masks) {
      if ((s & m) == m) {
        independent = false;
        break;
      }
    }
    total += independent ? 1 : 0;
    if (s + 1 == limit) break;
  }
  return BigCount(total);
}

BigCount count_brute_force(const Graph& g) { return count_brute_force(Hypergraph::from_graph(g)); }

}  // namespace indcount
