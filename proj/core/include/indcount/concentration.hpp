#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indcount/hypergraph.hpp"

namespace indcount {

enum class ClaimKind { linear, general };

/// Sampling probability of the degree-sum claims:
/// t^(-1/(k+1)) for linear hypergraphs, t^((eps-1)/(k(2k+1))) in general.
/// Requires t > 1 and 0 < eps < 4/(k+1).
double claim_p(const DegreeStats& stats, double eps, ClaimKind claim);
double claim_p(double t, std::size_t k, double eps, ClaimKind claim);

struct ConcentrationReport {
  double p = 0;
  std::size_t trials = 0;
  std::size_t n = 0;
  double t = 0;
  double eps = 0;
  double lambda = 0;        // n^(-eps/20)
  double expected_m = 0;    // n t p^(k+1)
  double threshold = 0;     // expected_m (1 + lambda)
  double empirical_mean = 0;
  double empirical_sd = 0;
  double exceed_fraction = 0;
  double claim_target = 0;  // n^-2, informational only
  std::vector<std::size_t> samples;  // m' per trial, in trial order

  /// |mean - expected| <= z * sd / sqrt(trials).
  bool mean_within(double z) const;
};

/// Fraction of samples strictly above `threshold`.
double exceed_fraction(const std::vector<std::size_t>& samples, double threshold);

/// Samples at the claim's p and measures the degree sum m' of the induced
/// subhypergraph per trial. Throws InvalidInput when t <= 1, trials < 100, or
/// the maximum degree exceeds t n^(eps/8).
ConcentrationReport check_concentration(const Hypergraph& h, double eps, std::size_t trials,
                                        std::uint64_t seed, ClaimKind claim);

/// Same measurement at an explicit p (used for boundary cases such as p = 1
/// or empty hypergraphs where the claim's p is undefined).
ConcentrationReport check_concentration_at(const Hypergraph& h, double p, double eps,
                                           std::size_t trials, std::uint64_t seed);

}  // namespace indcount
