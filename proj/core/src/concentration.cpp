#include "indcount/concentration.hpp"

#include <cmath>
#include <string>

#include "indcount/errors.hpp"
#include "indcount/generators.hpp"
#include "indcount/rng.hpp"

namespace indcount {
namespace {

void check_eps(double eps, std::size_t k) {
  if (!(eps > 0.0 && eps < 4.0 / static_cast<double>(k + 1))) {
    throw InvalidInput("eps must lie in (0, 4/(k+1))");
  }
}

}  // namespace

double claim_p(double t, std::size_t k, double eps, ClaimKind claim) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (!(t > 1.0)) throw InvalidInput("claim_p needs average degree t > 1");
  check_eps(eps, k);
  const double kd = static_cast<double>(k);
  if (claim == ClaimKind::linear) return std::pow(t, -1.0 / (kd + 1.0));
  return std::pow(t, (eps - 1.0) / (kd * (2.0 * kd + 1.0)));
}

double claim_p(const DegreeStats& stats, double eps, ClaimKind claim) {
  return claim_p(stats.t_avg.to_double(), stats.k, eps, claim);
}

bool ConcentrationReport::mean_within(double z) const {
  if (trials == 0) return false;
  const double band = z * empirical_sd / std::sqrt(static_cast<double>(trials));
  return std::fabs(empirical_mean - expected_m) <= band;
}

double exceed_fraction(const std::vector<std::size_t>& samples, double threshold) {
  if (samples.empty()) return 0.0;
  std::size_t above = 0;
  for (auto s : samples) above += static_cast<double>(s) > threshold ? 1 : 0;
  return static_cast<double>(above) / static_cast<double>(samples.size());
}

ConcentrationReport check_concentration_at(const Hypergraph& h, double p, double eps,
                                           std::size_t trials, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("sampling probability must lie in [0, 1]");
  if (trials < 100) throw InvalidInput("concentration check needs at least 100 trials");
  check_eps(eps, h.k());
  const auto stats = degree_stats(h);
  const double n = static_cast<double>(stats.n);
  const double t = stats.t_avg.to_double();
  const double max_allowed = t * std::pow(n, eps / 8.0);
  if (static_cast<double>(stats.t_max) > max_allowed) {
    throw InvalidInput("maximum degree " + std::to_string(stats.t_max) + " exceeds t n^(eps/8) = " +
                       std::to_string(max_allowed));
  }

  ConcentrationReport r;
  r.p = p;
  r.trials = trials;
  r.n = stats.n;
  r.t = t;
  r.eps = eps;
  r.lambda = std::pow(n, -eps / 20.0);
  // n t = (k+1) m exactly, so the expectation avoids the rounded t.
  r.expected_m = static_cast<double>(h.edge_size() * h.edge_count()) *
                 std::pow(p, static_cast<double>(h.edge_size()));
  r.threshold = r.expected_m * (1.0 + r.lambda);
  r.claim_target = 1.0 / (n * n);
  r.samples.reserve(trials);

  double sum = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto outcome = sample_vertices(h, p, derive_seed(seed, i));
    r.samples.push_back(outcome.m_prime);
    sum += static_cast<double>(outcome.m_prime);
  }
  r.empirical_mean = sum / static_cast<double>(trials);
  double sq = 0.0;
  for (auto s : r.samples) {
    const double d = static_cast<double>(s) - r.empirical_mean;
    sq += d * d;
  }
  r.empirical_sd = std::sqrt(sq / static_cast<double>(trials - 1));
  r.exceed_fraction = exceed_fraction(r.samples, r.threshold);
  return r;
}

ConcentrationReport check_concentration(const Hypergraph& h, double eps, std::size_t trials,
                                        std::uint64_t seed, ClaimKind claim) {
  const auto stats = degree_stats(h);
  const double p = claim_p(stats, eps, claim);
  return check_concentration_at(h, p, eps, trials, seed);
}

}  // namespace indcount
