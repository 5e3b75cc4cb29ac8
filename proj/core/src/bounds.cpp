#include "indcount/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "indcount/errors.hpp"
#include "indcount/independence.hpp"

namespace indcount {

double triangle_free_lower_constant() { return std::sqrt(std::numbers::ln2) / 4.0; }
double triangle_free_upper_constant() { return 1.0 + std::numbers::ln2; }

double thm1_first_branch(double n, double t) {
  if (!(n >= 1.0)) throw InvalidInput("thm1_lower needs n >= 1");
  if (!(t > 0.0)) throw InvalidInput("thm1_lower needs t > 0");
  const double lt = std::log(t);
  const double exponent = (1.0 - std::pow(n, -1.0 / 12.0)) * 0.5 * (n / t) * lt * (0.5 * lt - 1.0);
  return std::max(0.0, exponent);
}

LogValue thm1_lower(double n, double t) {
  return {std::max(thm1_first_branch(n, t), t * std::numbers::ln2)};
}

LogValue thm1_consequence(double n) {
  if (!(n >= 2.0)) throw InvalidInput("thm1_consequence needs n >= 2");
  return {triangle_free_lower_constant() * std::sqrt(n) * std::log(n)};
}

double thm1_minimizing_degree(double n) {
  if (!(n >= 2.0)) throw InvalidInput("thm1_minimizing_degree needs n >= 2");
  return 0.25 * std::sqrt(n / std::numbers::ln2) * std::log(n);
}

LogValue thm2_upper(double n) {
  if (!(n >= 2.0)) throw InvalidInput("thm2_upper needs n >= 2");
  return {triangle_free_upper_constant() * std::sqrt(n) * std::log(n)};
}

LogValue thm3_lower(double n, double t, std::size_t k, double c) {
  if (!(t > 1.0)) throw InvalidInput("thm3_lower needs t > 1");
  if (k < 1) throw InvalidInput("thm3_lower needs k >= 1");
  if (!(c >= 0.0)) throw InvalidInput("thm3_lower needs c >= 0");
  const double inv_k = 1.0 / static_cast<double>(k);
  return {c * (n / std::pow(t, inv_k)) * std::pow(std::log(t), 1.0 + inv_k)};
}

double FSpec::operator()(double t, std::size_t k) const {
  switch (kind) {
    case Kind::shearer:
      return shearer_f(t);
    case Kind::dlr:
      return dlr_f(t, k, c);
    case Kind::constant:
      return c;
  }
  return 0.0;
}

std::string FSpec::name() const {
  switch (kind) {
    case Kind::shearer:
      return "shearer";
    case Kind::dlr:
      return "dlr";
    case Kind::constant:
      return "const";
  }
  return "?";
}

FSpec::Kind parse_f_kind(const std::string& name) {
  if (name == "shearer") return FSpec::Kind::shearer;
  if (name == "dlr") return FSpec::Kind::dlr;
  if (name == "const" || name == "constant") return FSpec::Kind::constant;
  throw InvalidInput("unknown f '" + name + "' (expected shearer, dlr or const)");
}

double linear_hypergraph_epsilon(std::size_t k) { return 3.0 / static_cast<double>(k + 1); }

HereditaryBound thm4_alpha_prime(const BoundParams& p) {
  if (p.k < 1) throw InvalidInput("thm4: k must be >= 1");
  const double k = static_cast<double>(p.k);
  if (!(p.eps > 0.0 && p.eps < 4.0 / (k + 1.0))) {
    throw InvalidInput("thm4: eps must lie in (0, 4/(k+1))");
  }
  if (!(p.n >= 1.0)) throw InvalidInput("thm4: n must be >= 1");
  if (!(p.t > 0.0)) throw InvalidInput("thm4: t must be > 0");
  if (!(p.t < std::pow(p.n, k))) throw InvalidInput("thm4: requires t < n^k");

  const double shrink = 1.0 - std::pow(p.n, -p.eps / 21.0);
  HereditaryBound out;
  if (p.linear) {
    out.alpha_prime = shrink / (k + 1.0) * p.f(std::pow(p.t, 1.0 / (k + 1.0)), p.k);
  } else {
    const double point = std::pow(p.t, (2.0 * k + p.eps) / (2.0 * k + 1.0));
    out.alpha_prime = shrink * (1.0 - p.eps) / (k * (2.0 * k + 1.0)) * p.f(point, p.k);
  }
  out.ln_bound = {out.alpha_prime * (p.n / std::pow(p.t, 1.0 / k)) * std::log(p.t)};
  return out;
}

namespace {

// Binary splitting for sum_{i=a}^{b-1} prod_{j=a}^{i} (n-j)/(j+1) = t / q, with
// p and q the products of the numerators and denominators over [a, b).
struct Split {
  mpz_class p, q, t;
};

Split split_sum(std::size_t n, std::size_t a, std::size_t b) {
  if (b - a == 1) {
    Split s;
    s.p = static_cast<unsigned long>(n - a);
    s.q = static_cast<unsigned long>(a + 1);
    s.t = s.p;
    return s;
  }
  const std::size_t mid = a + (b - a) / 2;
  Split l = split_sum(n, a, mid);
  Split r = split_sum(n, mid, b);
  Split s;
  s.t = l.t * r.q + l.p * r.t;
  s.p = l.p * r.p;
  s.q = l.q * r.q;
  return s;
}

}  // namespace

BigCount binomial_partial_sum(std::size_t n, std::size_t alpha) {
  if (alpha > n) throw InvalidInput("binomial_sum_upper needs alpha <= n");
  if (alpha == 0) return BigCount(std::uint64_t{1});
  // sum_{i=0}^{alpha} C(n, i) = 1 + sum_{i=0}^{alpha-1} C(n, i+1); the quotient is exact.
  const Split s = split_sum(n, 0, alpha);
  mpz_class sum;
  mpz_divexact(sum.get_mpz_t(), s.t.get_mpz_t(), s.q.get_mpz_t());
  sum += 1;
  return BigCount(std::move(sum));
}

LogValue binomial_sum_upper(std::size_t n, std::size_t alpha) {
  return to_log(binomial_partial_sum(n, alpha));
}

LogValue eq1_lower(double n, double t) {
  if (!(t > 1.0)) throw InvalidInput("eq1_lower needs t > 1");
  const double log2t = std::log2(t);
  return {std::numbers::ln2 * (1.0 / 2400.0) * (n / t) * log2t * log2t};
}

}  // namespace indcount
