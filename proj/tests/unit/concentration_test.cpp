#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "indcount/concentration.hpp"
#include "indcount/errors.hpp"
#include "indcount/generators.hpp"

using namespace indcount;

TEST_CASE("claim sampling probabilities") {
  CHECK(claim_p(100, 1, 1.0, ClaimKind::linear) == doctest::Approx(0.1));
  CHECK(claim_p(100, 1, 0.5, ClaimKind::general) == doctest::Approx(0.46415888336127786));
  CHECK(claim_p(1.000001, 1, 0.5, ClaimKind::linear) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(claim_p(1.000001, 2, 0.5, ClaimKind::general) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS(claim_p(1.0, 1, 0.5, ClaimKind::linear), InvalidInput);
  CHECK_THROWS_AS(claim_p(10, 2, 4.0 / 3.0, ClaimKind::linear), InvalidInput);
}

TEST_CASE("degenerate concentration runs") {
  const auto fano = test::fano_plane();
  const auto full = check_concentration_at(fano, 1.0, 1.0, 100, 1);
  CHECK(full.exceed_fraction == 0.0);
  CHECK(full.empirical_mean == doctest::Approx(21.0));
  CHECK(full.expected_m == doctest::Approx(21.0));
  CHECK(full.threshold > full.expected_m);

  const auto empty = Hypergraph::from_edges(10, 2, {});
  const auto e = check_concentration_at(empty, 0.5, 1.0, 100, 1);
  CHECK(e.empirical_mean == 0.0);
  CHECK(e.exceed_fraction == 0.0);
  CHECK_THROWS_AS(check_concentration(empty, 1.0, 100, 1, ClaimKind::linear), InvalidInput);
  CHECK_THROWS_AS(check_concentration_at(fano, 0.5, 1.0, 99, 1), InvalidInput);
}

TEST_CASE("setup hypothesis is enforced") {
  // A star: one vertex in every edge, average degree near 2.
  std::vector<std::vector<Vertex>> edges;
  for (Vertex i = 1; i + 1 < 61; i += 2) edges.push_back({0, i, i + 1});
  const auto star = Hypergraph::from_edges(61, 2, edges);
  CHECK_THROWS_AS(check_concentration(star, 0.1, 100, 1, ClaimKind::linear), InvalidInput);
}

TEST_CASE("concentration on a random linear hypergraph") {
  const auto h = random_linear_hypergraph(400, 2, 2000, 4);
  const auto r = check_concentration(h, 1.0, 400, 9, ClaimKind::linear);
  const double t = 3.0 * 2000 / 400;
  CHECK(r.t == doctest::Approx(t));
  CHECK(r.p == doctest::Approx(std::pow(t, -1.0 / 3)));
  CHECK(r.expected_m == doctest::Approx(400 * t * std::pow(r.p, 3)));
  CHECK(r.lambda == doctest::Approx(std::pow(400.0, -1.0 / 20)));
  CHECK(r.threshold == doctest::Approx(r.expected_m * (1 + r.lambda)));
  CHECK(r.claim_target == doctest::Approx(1.0 / (400.0 * 400.0)));
  CHECK(r.samples.size() == 400);
  CHECK(r.mean_within(5.0));
  CHECK(r.exceed_fraction <= 0.2);

  const auto again = check_concentration(h, 1.0, 400, 9, ClaimKind::linear);
  CHECK(again.samples == r.samples);
}

TEST_CASE("exceed fraction is monotone in the threshold") {
  const std::vector<std::size_t> samples{1, 5, 5, 7, 9, 12, 12, 30};
  double last = 1.0;
  for (double thr = 0; thr < 35; thr += 0.5) {
    const double f = exceed_fraction(samples, thr);
    CHECK(f <= last);
    CHECK(f >= 0.0);
    last = f;
  }
  CHECK(exceed_fraction(samples, 12) == doctest::Approx(1.0 / 8));
}
