#pragma once

#include <cstddef>
#include <cstdint>

#include "indcount/big_count.hpp"
#include "indcount/counting.hpp"
#include "indcount/hypergraph.hpp"

namespace indcount {

/// Probabilistic lower bound on i(H) from random induced subhypergraphs.
///
/// If N counts the independent sets of H of size >= g and H' keeps each vertex
/// with probability p, then Pr[H' has an independent set of size >= g]
/// <= E[#such sets in H'] <= N p^g. Replacing the left side by its exact
/// one-sided binomial lower confidence limit q_lo gives, at the stated
/// confidence, ln i(H) >= ln N >= ln q_lo + g ln(1/p).
struct CountCertificate {
  std::size_t g = 0;
  double p = 1.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double confidence = 0.95;
  double q_lo = 0.0;
  LogValue ln_lower_bound;
};

/// Exact (Clopper-Pearson) one-sided lower confidence limit for a binomial
/// success probability. Returns 0 when successes == 0.
double clopper_pearson_lower(std::size_t successes, std::size_t trials, double confidence);

/// Upper tail Pr[X >= x] for X ~ Binomial(trials, q).
double binomial_upper_tail(std::size_t x, std::size_t trials, double q);

/// Runs `trials` vertex samples with per-trial seeds derived from `seed`;
/// each success is decided exactly. Throws InvalidInput on bad parameters
/// and BudgetExceeded when an induced instance is too hard (shrink p).
CountCertificate certify_lower_bound(const Hypergraph& h, double p, std::size_t g,
                                     std::size_t trials, double confidence, std::uint64_t seed,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace indcount
