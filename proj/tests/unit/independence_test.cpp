#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "indcount/errors.hpp"
#include "indcount/generators.hpp"
#include "indcount/independence.hpp"

using namespace indcount;
using test::make_hypergraph;

namespace {

std::size_t brute_alpha(const Hypergraph& h) {
  const auto n = h.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    if (s.size() > best && is_independent(h, s)) best = s.size();
  }
  return best;
}

}  // namespace

TEST_CASE("exact independence number of named instances") {
  CHECK(alpha_exact(cycle_graph(5)).alpha == 2);
  CHECK(alpha_exact(empty_graph(9)).alpha == 9);
  CHECK(alpha_exact(complete_graph(9)).alpha == 1);
  CHECK(alpha_exact(test::petersen()).alpha == 4);
  CHECK(alpha_exact(test::fano_plane()).alpha == 4);
  CHECK(alpha_exact(empty_graph(0)).alpha == 0);
  for (std::size_t k = 1; k <= 6; ++k) {
    std::vector<Vertex> e(k + 1);
    for (Vertex i = 0; i <= k; ++i) e[i] = i;
    const auto r = alpha_exact(make_hypergraph(k + 1, k, {e}));
    CHECK(r.alpha == k);
    CHECK(r.exact);
  }
}

TEST_CASE("exact alpha matches brute force and its witness is independent") {
  for (std::uint64_t s = 1; s <= 40; ++s) {
    const auto g = Hypergraph::from_graph(random_graph(6 + s % 10, 0.3, s));
    const auto r = alpha_exact(g);
    CHECK(r.alpha == brute_alpha(g));
    CHECK(r.witness.size() == r.alpha);
    CHECK(is_independent(g, r.witness));
    const auto h = random_uniform_hypergraph(6 + s % 8, 2, 0.25, s);
    const auto rh = alpha_exact(h);
    CHECK(rh.alpha == brute_alpha(h));
    CHECK(is_independent(h, rh.witness));
  }
}

TEST_CASE("decision version agrees with the optimum") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto h = random_uniform_hypergraph(12, 2, 0.2, s);
    const auto a = alpha_exact(h).alpha;
    CHECK(has_independent_set_of_size(h, a));
    CHECK_FALSE(has_independent_set_of_size(h, a + 1));
    CHECK(has_independent_set_of_size(h, 0));
  }
}

TEST_CASE("greedy sets are maximal and never beat the optimum") {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const auto g = random_graph(20, 0.2, s);
    const auto greedy = greedy_independent_set(g, s);
    const auto exact = alpha_exact(g);
    CHECK_FALSE(greedy.exact);
    CHECK(is_independent(g, greedy.witness));
    CHECK(greedy.alpha <= exact.alpha);
    const auto stats = degree_stats(g);
    CHECK(static_cast<double>(greedy.alpha) >=
          static_cast<double>(g.vertex_count()) / static_cast<double>(stats.t_max + 1));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (std::find(greedy.witness.begin(), greedy.witness.end(), v) != greedy.witness.end()) continue;
      auto bigger = greedy.witness;
      bigger.push_back(v);
      CHECK_FALSE(is_independent(g, bigger));
    }

    const auto h = random_uniform_hypergraph(14, 2, 0.15, s);
    const auto gh = greedy_independent_set(h, s);
    CHECK(is_independent(h, gh.witness));
    CHECK(gh.alpha <= alpha_exact(h).alpha);
  }
  CHECK(greedy_independent_set(empty_graph(7), 1).alpha == 7);
  CHECK(greedy_independent_set(complete_graph(7), 1).alpha == 1);
}

TEST_CASE("shearer bound on small triangle-free graphs") {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const std::size_t n = 15 + s % 26;
    const auto g = triangle_free_process(n, s);
    const double t = degree_stats(g).t_avg.to_double();
    if (t <= std::numbers::e) continue;
    const double bound = static_cast<double>(n) / t * shearer_f(t);
    CHECK(static_cast<double>(alpha_exact(g).alpha) >= std::floor(bound));
  }
}

TEST_CASE("f evaluators") {
  CHECK(shearer_f(std::numbers::e) == doctest::Approx(0.0));
  CHECK(shearer_f(std::exp(3.0)) == doctest::Approx(2.0));
  CHECK(shearer_f(10) == doctest::Approx(1.302585092994046).epsilon(1e-14));
  CHECK(shearer_f(1) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(shearer_f(0), InvalidInput);

  CHECK(dlr_f(std::numbers::e, 1, 1) == doctest::Approx(1.0));
  CHECK(dlr_f(std::exp(8.0), 3, 1) == doctest::Approx(2.0));
  CHECK(dlr_f(20, 2, 0.5) == doctest::Approx(0.8654091913011427).epsilon(1e-14));
  CHECK_THROWS_AS(dlr_f(1, 2, 1), InvalidInput);
  CHECK_THROWS_AS(dlr_f(5, 2, 0), InvalidInput);
}

TEST_CASE("alpha budget") {
  CHECK_THROWS_AS(alpha_exact(random_graph(60, 0.1, 2), 3), BudgetExceeded);
}
