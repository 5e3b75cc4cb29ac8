#pragma once

#include <cstddef>
#include <string>

#include "indcount/big_count.hpp"

namespace indcount {

// Closed-form bounds on ln i(H), all in nats. Evaluators whose o(1) terms
// have been dropped are asymptotic targets, not finite-n guarantees:
// thm1_consequence and thm2_upper.

/// sqrt(ln 2) / 4.
double triangle_free_lower_constant();
/// 1 + ln 2.
double triangle_free_upper_constant();

/// Triangle-free lower bound, max of the Shearer-driven exponent (clamped at
/// 0) and the neighbourhood bound t ln 2. Requires n >= 1, t > 0.
LogValue thm1_lower(double n, double t);
/// Just the first (Shearer) exponent, clamped at 0.
double thm1_first_branch(double n, double t);

/// c1 sqrt(n) ln n. Requires n >= 2.
LogValue thm1_consequence(double n);
/// Average degree minimising the triangle-free lower bound, leading order:
/// (1/4) sqrt(n / ln 2) ln n.
double thm1_minimizing_degree(double n);

/// c2 sqrt(n) ln n. Requires n >= 2.
LogValue thm2_upper(double n);

/// c (n / t^(1/k)) (ln t)^(1 + 1/k). Requires t > 1, k >= 1, c >= 0.
LogValue thm3_lower(double n, double t, std::size_t k, double c);

struct FSpec {
  enum class Kind { shearer, dlr, constant };
  Kind kind = Kind::shearer;
  double c = 1.0;  // dlr multiplier, or the constant value

  double operator()(double t, std::size_t k) const;
  std::string name() const;
};

FSpec::Kind parse_f_kind(const std::string& name);

struct BoundParams {
  double n = 0;
  double t = 0;
  std::size_t k = 1;
  double eps = 1.0;
  bool linear = true;
  FSpec f;
};

/// eps that turns the hereditary-property bound into the triangle-free one.
inline constexpr double kTriangleFreeEpsilon = 21.0 / 12.0;
/// eps used for linear (k+1)-uniform hypergraphs.
double linear_hypergraph_epsilon(std::size_t k);

struct HereditaryBound {
  double alpha_prime = 0;
  LogValue ln_bound;
};

/// Hereditary-property bound: ln_bound = alpha' (n / t^(1/k)) ln t, with
///   alpha' = (1 - n^(-eps/21)) / (k+1) * f(t^(1/(k+1)))                linear
///   alpha' = (1 - n^(-eps/21)) (1-eps) / (k(2k+1)) * f(t^((2k+eps)/(2k+1)))  otherwise.
/// Throws InvalidInput unless 0 < eps < 4/(k+1), 0 < t < n^k.
HereditaryBound thm4_alpha_prime(const BoundParams& params);

/// ln sum_{i=0..alpha} C(n, i), summed exactly.
LogValue binomial_sum_upper(std::size_t n, std::size_t alpha);
BigCount binomial_partial_sum(std::size_t n, std::size_t alpha);

/// ln 2 * (1/2400) (n/t) log2(t)^2. Requires t > 1.
LogValue eq1_lower(double n, double t);

}  // namespace indcount
