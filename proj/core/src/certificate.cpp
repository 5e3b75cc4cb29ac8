#include "indcount/certificate.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "indcount/errors.hpp"
#include "indcount/generators.hpp"
#include "indcount/independence.hpp"
#include "indcount/rng.hpp"

namespace indcount {

double clopper_pearson_lower(std::size_t successes, std::size_t trials, double confidence) {
  if (trials == 0) throw InvalidInput("clopper_pearson_lower needs trials >= 1");
  if (successes > trials) throw InvalidInput("successes exceed trials");
  if (!(confidence > 0.0 && confidence < 1.0)) throw InvalidInput("confidence must lie in (0, 1)");
  if (successes == 0) return 0.0;
  // Lower limit is the (1 - confidence) quantile of Beta(x, n - x + 1).
  return boost::math::ibeta_inv(static_cast<double>(successes),
                                static_cast<double>(trials - successes + 1), 1.0 - confidence);
}

double binomial_upper_tail(std::size_t x, std::size_t trials, double q) {
  if (x == 0) return 1.0;
  if (x > trials) return 0.0;
  // Pr[X >= x] = I_q(x, n - x + 1).
  return boost::math::ibeta(static_cast<double>(x), static_cast<double>(trials - x + 1), q);
}

CountCertificate certify_lower_bound(const Hypergraph& h, double p, std::size_t g,
                                     std::size_t trials, double confidence, std::uint64_t seed,
                                     std::uint64_t node_budget) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidInput("certify: p must lie in (0, 1]");
  if (trials < 1) throw InvalidInput("certify: trials must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw InvalidInput("certify: confidence must lie in (0, 1)");
  }

  CountCertificate cert;
  cert.g = g;
  cert.p = p;
  cert.trials = trials;
  cert.confidence = confidence;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto sample = sample_vertices(h, p, derive_seed(seed, trial));
    if (sample.n_prime < g) continue;
    const auto induced = induced_subhypergraph(h, sample.selected);
    if (has_independent_set_of_size(induced.hypergraph, g, node_budget)) ++cert.successes;
  }

  cert.q_lo = clopper_pearson_lower(cert.successes, trials, confidence);
  if (cert.q_lo > 0.0) {
    cert.ln_lower_bound = {std::log(cert.q_lo) + static_cast<double>(g) * std::log(1.0 / p)};
  } else {
    cert.ln_lower_bound = LogValue::negative_infinity();
  }
  return cert;
}

}  // namespace indcount
