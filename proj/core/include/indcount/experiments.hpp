#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "indcount/concentration.hpp"
#include "indcount/counting.hpp"
#include "indcount/graph.hpp"
#include "indcount/hypergraph.hpp"
#include "indcount/report.hpp"

namespace indcount {

struct NamedInstance {
  std::string name;
  Hypergraph hypergraph;
};

/// Batch of generated instances. Instance i uses derive_seed(seed, i).
///
/// families:
///   tfp         triangle-free process, n uniform in [n_min, n_max]
///   linear      random linear (k+1)-uniform, m chosen so t_avg is uniform in [t_min, t_max]
///   gnp         G(n, edge_probability)
///   hyper-gnp   random (k+1)-uniform, each (k+1)-set with edge_probability
///   path/cycle  P_n / C_n for n in [n_min, n_max] (count ignored)
struct GeneratorSpec {
  std::string family = "tfp";
  std::size_t count = 1;
  std::size_t n_min = 20;
  std::size_t n_max = 40;
  std::size_t k = 2;
  double t_min = 2.0;
  double t_max = 5.0;
  double edge_probability = 0.3;
  std::uint64_t seed = 1;
};

struct InstanceSource {
  std::vector<std::string> files;
  std::optional<GeneratorSpec> generator;
};

std::vector<NamedInstance> materialize(const InstanceSource& source);

enum class ExperimentKind {
  thm1_verify,
  thm3_verify,
  blowup_verify,
  certify_vs_exact,
  concentration,
  tfp_stats,
  bound_table,
};

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

/// Everything needed to reproduce a run; echoed verbatim into the report.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::bound_table;
  InstanceSource source;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultNodeBudget;

  // certify-vs-exact
  std::size_t trials = 500;
  double confidence = 0.95;
  std::vector<double> p_list{0.4, 0.6};
  std::size_t repetitions = 1;

  // concentration
  double eps = 1.0;
  ClaimKind claim = ClaimKind::linear;

  // thm3-verify
  std::vector<double> c_grid{0.01, 0.02, 0.05, 0.1, 0.2, 0.5};

  // tfp-stats
  std::vector<std::size_t> n_list{64, 256, 1024};
  std::vector<std::uint64_t> seeds{1, 2, 3};

  // blowup-verify; r == 0 selects the max(1, round(ln(n)/2)) preset
  std::size_t r = 0;
  std::size_t blowup_samples = 100'000;

  // bound-table
  std::vector<double> bound_n{1e2, 1e3, 1e4, 1e5, 1e6};
  std::vector<double> bound_t{10, 30, 100};

  std::string output;
  bool stable = false;

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// ln i(G) >= thm1_lower(n, t_avg) for every instance. Throws InvalidInput on
/// a non-graph or non-triangle-free instance.
Report verify_thm1(std::span<const NamedInstance> instances,
                   std::uint64_t budget = kDefaultNodeBudget);

struct BlowupCheckOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t samples = 100'000;  // sampled independent sets when n > 6
  std::uint64_t seed = 1;
  bool check_preset_chain = false;      // also evaluate the logarithmic chain
};

/// Checks on G' = blowup(g, r):
///   (a) every independent S of G' has f(S) independent and |S| <= r |f(S)|
///       (exhaustive for n <= 6, sampled for n <= 20);
///   (b) i(G') <= sum over independent I of g of 2^(r|I|), exactly;
///   (c) with the preset r, ln i(G') against ln a + a ln(ne/a) + a ln n ln 2 / 2.
Report verify_blowup(const Graph& g, std::size_t r, const BlowupCheckOptions& options = {});
void append_blowup_rows(Report& report, const std::string& name, const Graph& g, std::size_t r,
                        const BlowupCheckOptions& options);

/// Empirical constant ln i(H) / [(n / t^(1/k)) (ln t)^(1+1/k)] per instance;
/// instances with t <= 1 are skipped. Throws InvalidInput on non-linear input.
Report verify_thm3(std::span<const NamedInstance> instances, std::span<const double> c_grid,
                   std::uint64_t budget = kDefaultNodeBudget);

/// Triangle-free process statistics against the sqrt(n ln n / 2) degree and
/// sqrt(2 n ln n) independence scales. Exact alpha is added for n <= 50.
Report tfp_stats(std::span<const std::size_t> n_list, std::span<const std::uint64_t> seeds,
                 std::uint64_t budget = kDefaultNodeBudget);

Report certify_vs_exact(std::span<const NamedInstance> instances, const ExperimentConfig& config);
Report concentration_experiment(std::span<const NamedInstance> instances,
                                const ExperimentConfig& config);
Report bound_table(std::span<const double> n_grid, std::span<const double> t_grid);

/// Dispatches on config.kind. The returned report's passed() decides the exit
/// status (0 / 1).
Report run(const ExperimentConfig& config);

}  // namespace indcount
