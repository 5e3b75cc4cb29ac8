#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "indcount/bounds.hpp"
#include "indcount/counting.hpp"
#include "indcount/errors.hpp"
#include "indcount/generators.hpp"
#include "indcount/independence.hpp"

using namespace indcount;

namespace {

const double kLn2 = std::numbers::ln2;
const double kE2 = std::exp(2.0);

}  // namespace

TEST_CASE("constants") {
  CHECK(triangle_free_lower_constant() == doctest::Approx(0.2081386527894244).epsilon(1e-14));
  CHECK(triangle_free_upper_constant() == doctest::Approx(1.6931471805599453).epsilon(1e-14));
}

TEST_CASE("triangle-free lower bound") {
  CHECK(thm1_first_branch(100, 10) == doctest::Approx(0.5551317881096165).epsilon(1e-12));
  CHECK(thm1_lower(100, 10).nats == doctest::Approx(10 * kLn2).epsilon(1e-14));
  CHECK(thm1_first_branch(100, kE2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(thm1_lower(100, kE2).nats == doctest::Approx(kE2 * kLn2).epsilon(1e-14));
  CHECK(thm1_first_branch(1e4, 30) == doctest::Approx(212.80701615142077).epsilon(1e-12));
  CHECK(thm1_first_branch(100, 2) == 0.0);
  CHECK(thm1_lower(5, 2).nats == doctest::Approx(2 * kLn2));
  for (double n : {10.0, 1e3, 1e5}) {
    for (double t : {0.5, 3.0, 20.0, 200.0}) {
      CHECK(thm1_lower(n, t).nats >= t * kLn2);
      CHECK(thm1_lower(n, t).nats >= 0.0);
    }
  }
}

TEST_CASE("asymptotic targets") {
  CHECK(thm1_consequence(4).nats == doctest::Approx(0.5770828813861398).epsilon(1e-12));
  CHECK(thm2_upper(4).nats == doctest::Approx(4.694400777912587).epsilon(1e-12));
  CHECK(thm2_upper(1e6).nats == doctest::Approx(23391.692749213368).epsilon(1e-12));
  CHECK(thm1_minimizing_degree(1e4) ==
        doctest::Approx(0.25 * std::sqrt(1e4 / kLn2) * std::log(1e4)));
  CHECK_THROWS_AS(thm2_upper(1), InvalidInput);
  CHECK_THROWS_AS(thm1_consequence(1), InvalidInput);
}

TEST_CASE("linear hypergraph lower bound") {
  CHECK(thm3_lower(100, std::numbers::e, 1, 1).nats ==
        doctest::Approx(36.78794411714423).epsilon(1e-12));
  CHECK(thm3_lower(100, 5, 2, 0).nats == 0.0);
  CHECK(thm3_lower(200, 5, 2, 1).nats > thm3_lower(100, 5, 2, 1).nats);
  CHECK(thm3_lower(100, 5, 2, 2).nats > thm3_lower(100, 5, 2, 1).nats);
  CHECK_THROWS_AS(thm3_lower(100, 1, 2, 1), InvalidInput);
}

TEST_CASE("hereditary bound reproduces the triangle-free first branch") {
  for (double n : {100.0, 1e3, 1e5, 1e6}) {
    for (double t : {8.0, 20.0, 55.0}) {
      BoundParams p;
      p.n = n;
      p.t = t;
      p.k = 1;
      p.eps = kTriangleFreeEpsilon;
      p.linear = true;
      const auto r = thm4_alpha_prime(p);
      CHECK(r.ln_bound.nats == doctest::Approx(thm1_first_branch(n, t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("hereditary bound with the dlr f") {
  const double n = 1e4, t = 20, c = 0.7;
  const std::size_t k = 2;
  BoundParams p{n, t, k, linear_hypergraph_epsilon(k), true, {FSpec::Kind::dlr, c}};
  const double expected = (1 - std::pow(n, -p.eps / 21)) * c / std::pow(3.0, 1.5) * n /
                          std::sqrt(t) * std::pow(std::log(t), 1.5);
  CHECK(thm4_alpha_prime(p).ln_bound.nats == doctest::Approx(expected).epsilon(1e-12));
  CHECK(linear_hypergraph_epsilon(2) == doctest::Approx(1.0));
}

TEST_CASE("hereditary bound, non-linear branch") {
  BoundParams p{1e4, 10, 1, 0.5, false, {FSpec::Kind::constant, 1.0}};
  const auto r = thm4_alpha_prime(p);
  CHECK(r.alpha_prime == doctest::Approx(0.03281904631014143).epsilon(1e-12));
  CHECK(r.ln_bound.nats == doctest::Approx(r.alpha_prime * 1e4 / 10 * std::log(10.0)));
}

TEST_CASE("hereditary bound rejects out-of-range parameters") {
  BoundParams p{100, 10, 1, 2.0, true, {}};
  CHECK_THROWS_AS(thm4_alpha_prime(p), InvalidInput);
  p.eps = 0;
  CHECK_THROWS_AS(thm4_alpha_prime(p), InvalidInput);
  p.eps = 1;
  p.t = 100;
  CHECK_THROWS_AS(thm4_alpha_prime(p), InvalidInput);
  CHECK(parse_f_kind("dlr") == FSpec::Kind::dlr);
  CHECK_THROWS_AS(parse_f_kind("nope"), InvalidInput);
}

TEST_CASE("binomial partial sums") {
  CHECK(binomial_sum_upper(5, 2).nats == doctest::Approx(std::log(16.0)));
  CHECK(binomial_sum_upper(5, 2).nats > std::log(11.0));
  CHECK(binomial_sum_upper(40, 40).nats == doctest::Approx(40 * kLn2).epsilon(1e-14));
  CHECK(binomial_sum_upper(17, 1).nats == doctest::Approx(std::log(18.0)));
  CHECK(binomial_sum_upper(10, 0).nats == 0.0);
  CHECK(binomial_partial_sum(100, 3).to_string() == "166751");
  for (std::size_t a = 1; a <= 30; ++a) CHECK(binomial_sum_upper(30, a) > binomial_sum_upper(30, a - 1));
}

TEST_CASE("binomial partial sums match term-by-term summation") {
  for (std::size_t n : {1u, 2u, 7u, 64u, 333u, 1000u}) {
    mpz_class sum = 0;
    for (std::size_t a = 0; a <= n; ++a) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), n, a);
      sum += c;
      if (a % 7 == 0 || a == n) CHECK(binomial_partial_sum(n, a) == BigCount(sum));
    }
  }
}

TEST_CASE("binomial sum dominates exact counts") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto g = random_graph(16, 0.3, s);
    CHECK(binomial_partial_sum(16, alpha_exact(g).alpha) >= count_exact(g));
  }
}

TEST_CASE("earlier triangle-free bound") {
  CHECK(eq1_lower(100, 10).nats == doctest::Approx(0.031870925463690626).epsilon(1e-12));
  CHECK(eq1_lower(2400, 2).nats == doctest::Approx(0.34657359027997264).epsilon(1e-12));
  CHECK_THROWS_AS(eq1_lower(100, 1), InvalidInput);
}
