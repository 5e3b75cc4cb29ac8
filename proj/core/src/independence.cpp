#include "indcount/independence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "indcount/detail/vertex_mask.hpp"
#include "indcount/errors.hpp"
#include "indcount/rng.hpp"

namespace indcount {
namespace {

using detail::VertexMask;

template <std::size_t W>
class AlphaSearch {
 public:
  using Mask = VertexMask<W>;
  using Edges = std::vector<Mask>;

  AlphaSearch(const Hypergraph& h, std::uint64_t budget, std::size_t target)
      : budget_(budget), target_(target) {
    for (const auto& e : h.edges()) {
      Mask m;
      for (Vertex v : e) m.set(v);
      edges_.push_back(m);
    }
    all_ = Mask::first_n(h.vertex_count());
  }

  void seed_incumbent(const std::vector<Vertex>& set) {
    Mask m;
    for (Vertex v : set) m.set(v);
    best_ = m;
    best_size_ = set.size();
  }

  void run() {
    if (!done()) search(all_, Mask{}, edges_);
  }

  std::size_t best_size() const { return best_size_; }

  std::vector<Vertex> witness() const {
    std::vector<Vertex> out;
    best_.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
    return out;
  }

 private:
  bool done() const { return target_ != 0 && best_size_ >= target_; }

  void search(Mask rest, Mask chosen, Edges edges) {
    if (done()) return;
    if (++nodes_ > budget_) {
      throw BudgetExceeded("alpha_exact: node budget of " + std::to_string(budget_) + " exceeded");
    }
    while (true) {
      Mask excluded;
      for (const auto& e : edges) {
        if (e.count() == 1) excluded |= e;
      }
      if (excluded.empty()) break;
      rest -= excluded;
      std::erase_if(edges, [&](const Mask& e) { return e.intersects(excluded); });
    }
    Mask covered;
    for (const auto& e : edges) covered |= e;
    chosen |= rest - covered;
    rest = covered;

    if (edges.empty()) {
      if (chosen.count() > best_size_) {
        best_size_ = chosen.count();
        best_ = chosen;
      }
      return;
    }

    // Each pairwise-disjoint constraint costs at least one free vertex.
    Mask used;
    std::size_t disjoint = 0;
    for (const auto& e : edges) {
      if (!e.intersects(used)) {
        used |= e;
        ++disjoint;
      }
    }
    if (chosen.count() + rest.count() - disjoint <= best_size_) return;

    std::vector<std::size_t> degree(Mask::kCapacity, 0);
    for (const auto& e : edges) e.for_each([&](std::size_t v) { ++degree[v]; });
    std::size_t pivot = rest.first();
    rest.for_each([&](std::size_t v) {
      if (degree[v] > degree[pivot]) pivot = v;
    });

    Mask without = rest;
    without.reset(pivot);
    Edges shrunk;
    Edges dropped;
    shrunk.reserve(edges.size());
    dropped.reserve(edges.size());
    for (const auto& e : edges) {
      if (e.test(pivot)) {
        Mask s = e;
        s.reset(pivot);
        shrunk.push_back(s);
      } else {
        shrunk.push_back(e);
        dropped.push_back(e);
      }
    }
    Mask with = chosen;
    with.set(pivot);
    search(without, with, std::move(shrunk));
    search(without, chosen, std::move(dropped));
  }

  std::uint64_t budget_;
  std::size_t target_;
  std::uint64_t nodes_ = 0;
  Edges edges_;
  Mask all_;
  Mask best_;
  std::size_t best_size_ = 0;
};

void check_size(std::size_t n) {
  if (n > detail::kMaxMaskVertices) {
    throw BudgetExceeded("alpha_exact: " + std::to_string(n) + " vertices exceeds the " +
                         std::to_string(detail::kMaxMaskVertices) + "-vertex engine limit");
  }
}

}  // namespace

bool is_independent(const Hypergraph& h, std::span<const Vertex> set) {
  std::vector<char> in(h.vertex_count(), 0);
  for (Vertex v : set) {
    if (v >= h.vertex_count()) throw InvalidInput("is_independent: vertex out of range");
    in[v] = 1;
  }
  for (const auto& e : h.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v] != 0; })) return false;
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

AlphaResult alpha_exact(const Hypergraph& h, std::uint64_t node_budget) {
  check_size(h.vertex_count());
  AlphaResult out;
  out.exact = true;
  const auto greedy = greedy_independent_set(h, 0);
  detail::dispatch_mask_width(std::max<std::size_t>(h.vertex_count(), 1), [&]<std::size_t W>() {
    AlphaSearch<W> search(h, node_budget, 0);
    search.seed_incumbent(greedy.witness);
    search.run();
    out.alpha = search.best_size();
    out.witness = search.witness();
  });
  return out;
}

AlphaResult alpha_exact(const Graph& g, std::uint64_t node_budget) {
  return alpha_exact(Hypergraph::from_graph(g), node_budget);
}

bool has_independent_set_of_size(const Hypergraph& h, std::size_t target,
                                 std::uint64_t node_budget) {
  if (target == 0) return true;
  if (target > h.vertex_count()) return false;
  check_size(h.vertex_count());
  const auto greedy = greedy_independent_set(h, 0);
  if (greedy.alpha >= target) return true;
  bool found = false;
  detail::dispatch_mask_width(h.vertex_count(), [&]<std::size_t W>() {
    AlphaSearch<W> search(h, node_budget, target);
    search.seed_incumbent(greedy.witness);
    search.run();
    found = search.best_size() >= target;
  });
  return found;
}

AlphaResult greedy_independent_set(const Hypergraph& h, std::uint64_t seed) {
  std::vector<Vertex> order(h.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  Rng rng(seed);
  rng.shuffle(std::span<Vertex>(order));

  std::vector<std::size_t> chosen_in_edge(h.edge_count(), 0);
  AlphaResult out;
  for (Vertex v : order) {
    const auto& inc = h.incident(v);
    const bool completes = std::any_of(inc.begin(), inc.end(), [&](std::size_t e) {
      return chosen_in_edge[e] + 1 == h.edge_size();
    });
    if (completes) continue;
    for (std::size_t e : inc) ++chosen_in_edge[e];
    out.witness.push_back(v);
  }
  std::sort(out.witness.begin(), out.witness.end());
  out.alpha = out.witness.size();
  out.exact = false;
  return out;
}

AlphaResult greedy_independent_set(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  Rng rng(seed);
  rng.shuffle(std::span<Vertex>(order));

  std::vector<char> blocked(g.vertex_count(), 0);
  AlphaResult out;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    out.witness.push_back(v);
    for (Vertex u : g.neighbors(v)) blocked[u] = 1;
  }
  std::sort(out.witness.begin(), out.witness.end());
  out.alpha = out.witness.size();
  out.exact = false;
  return out;
}

double shearer_f(double t) {
  if (!(t > 0.0)) throw InvalidInput("shearer_f needs t > 0");
  return std::log(t) - 1.0;
}

double dlr_f(double t, std::size_t k, double c) {
  if (!(t > 1.0)) throw InvalidInput("dlr_f needs t > 1");
  if (k == 0) throw InvalidInput("dlr_f needs k >= 1");
  if (!(c > 0.0)) throw InvalidInput("dlr_f needs c > 0");
  return c * std::pow(std::log(t), 1.0 / static_cast<double>(k));
}

}  // namespace indcount
