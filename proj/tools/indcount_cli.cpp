// indcount: command-line front end for counting, bounding and certifying
// independent sets, plus the experiment harness.
//
// Exit codes: 0 success, 1 a hard verdict failed, 2 usage or input error,
// 3 search budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "indcount/bounds.hpp"
#include "indcount/certificate.hpp"
#include "indcount/concentration.hpp"
#include "indcount/counting.hpp"
#include "indcount/errors.hpp"
#include "indcount/experiments.hpp"
#include "indcount/generators.hpp"
#include "indcount/independence.hpp"
#include "indcount/instance_io.hpp"

namespace {

using nlohmann::json;
using namespace indcount;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOptions {
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--seed", common.seed, "Seed for every random choice")->capture_default_str();
  cmd->add_option("--output", common.output, "Write the result here instead of stdout");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void emit(const CommonOptions& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output);
  if (!out) throw InvalidInput("cannot write '" + common.output + "'");
  out << text;
}

// Flat single-row CSV for commands that produce one JSON object.
std::string object_to_csv(const json& j) {
  std::ostringstream header;
  std::ostringstream values;
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_structured()) continue;
    header << (first ? "" : ",") << it.key();
    values << (first ? "" : ",")
           << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    first = false;
  }
  return header.str() + "\n" + values.str() + "\n";
}

void emit_object(const CommonOptions& common, const json& j) {
  emit(common, common.format == "csv" ? object_to_csv(j) : j.dump(2) + "\n");
}

json witness_json(const std::vector<Vertex>& w) { return json(w); }

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string family = "tfp";
  std::size_t n = 20;
  std::size_t k = 2;
  std::size_t m = 0;
  std::size_t r = 0;
  double p = 0.3;
  std::size_t max_attempts = 0;
  std::string input;
  std::string meta;
};

int run_generate(const GenerateArgs& a, const CommonOptions& common) {
  json meta;
  meta["schema"] = Report::kSchemaVersion;
  meta["family"] = a.family;
  meta["seed"] = common.seed;
  Hypergraph h;
  if (a.family == "tfp") {
    const auto run = run_triangle_free_process(a.n, common.seed);
    h = Hypergraph::from_graph(run.graph);
    meta["parameters"] = {{"n", a.n}};
    meta["process"] = {{"steps", run.stats.steps},
                       {"initial_open_pairs", run.stats.initial_open_pairs},
                       {"pairs_closed", run.stats.pairs_closed},
                       {"max_degree", run.stats.max_degree}};
  } else if (a.family == "blowup") {
    if (a.input.empty()) throw InvalidInput("generate --family blowup needs --input");
    const Graph g = read_instance_file(a.input).to_graph();
    const Blowup bu = a.r == 0 ? paper_blowup(g) : blowup(g, a.r);
    h = Hypergraph::from_graph(bu.graph);
    meta["parameters"] = {{"input", a.input}, {"r_requested", a.r}};
    meta["blowup"] = {{"r", bu.map.r}, {"raw_r", bu.map.raw_r},
                      {"original_vertices", bu.map.original_vertices}};
  } else if (a.family == "linear") {
    h = random_linear_hypergraph(a.n, a.k, a.m, common.seed, a.max_attempts);
    meta["parameters"] = {{"n", a.n}, {"k", a.k}, {"m", a.m}, {"max_attempts", a.max_attempts}};
  } else if (a.family == "gnp") {
    h = Hypergraph::from_graph(random_graph(a.n, a.p, common.seed));
    meta["parameters"] = {{"n", a.n}, {"p", a.p}};
  } else if (a.family == "hyper-gnp") {
    h = random_uniform_hypergraph(a.n, a.k, a.p, common.seed);
    meta["parameters"] = {{"n", a.n}, {"k", a.k}, {"p", a.p}};
  } else if (a.family == "path" || a.family == "cycle" || a.family == "complete" ||
             a.family == "empty") {
    Graph g;
    if (a.family == "path") g = path_graph(a.n);
    if (a.family == "cycle") g = cycle_graph(a.n);
    if (a.family == "complete") g = complete_graph(a.n);
    if (a.family == "empty") g = empty_graph(a.n);
    h = Hypergraph::from_graph(g);
    meta["parameters"] = {{"n", a.n}};
  } else {
    throw InvalidInput("unknown family '" + a.family + "'");
  }
  if (h.vertex_count() > 0) {
    const auto stats = degree_stats(h);
    meta["stats"] = {{"n", stats.n},
                     {"m", stats.m},
                     {"k", stats.k},
                     {"t_avg", stats.t_avg.to_double()},
                     {"t_max", stats.t_max},
                     {"linear", is_linear(h)}};
  }
  emit(common, to_instance_text(h));
  std::string meta_path = a.meta;
  if (meta_path.empty() && !common.output.empty()) meta_path = common.output + ".json";
  if (!meta_path.empty()) {
    std::ofstream out(meta_path);
    if (!out) throw InvalidInput("cannot write '" + meta_path + "'");
    out << meta.dump(2) << "\n";
  }
  return kExitOk;
}

// --- count / alpha / certify / concentration --------------------------------

int run_count(const std::string& input, bool brute, std::uint64_t budget,
              const CommonOptions& common) {
  const auto h = read_instance_file(input);
  CountOptions options;
  options.node_budget = budget;
  CountStats stats;
  const BigCount c = brute ? count_brute_force(h) : count_exact(h, options, &stats);
  json j;
  j["input"] = input;
  j["count"] = c.to_string();
  j["ln_count"] = to_log(c).nats;
  j["method"] = brute ? "brute-force" : "branch-and-reduce";
  if (!brute) j["nodes"] = stats.nodes;
  emit_object(common, j);
  return kExitOk;
}

int run_alpha(const std::string& input, bool greedy, std::uint64_t budget,
              const CommonOptions& common) {
  const auto h = read_instance_file(input);
  const AlphaResult r = greedy ? greedy_independent_set(h, common.seed) : alpha_exact(h, budget);
  json j;
  j["input"] = input;
  j["alpha"] = r.alpha;
  j["witness"] = witness_json(r.witness);
  j["exact"] = r.exact;
  emit_object(common, j);
  return kExitOk;
}

struct CertifyArgs {
  std::string input;
  double p = 0.5;
  std::size_t g = 0;
  std::size_t trials = 500;
  double confidence = 0.95;
  std::uint64_t budget = kDefaultNodeBudget;
};

int run_certify(const CertifyArgs& a, const CommonOptions& common) {
  const auto h = read_instance_file(a.input);
  const auto cert = certify_lower_bound(h, a.p, a.g, a.trials, a.confidence, common.seed, a.budget);
  json j;
  j["input"] = a.input;
  j["g"] = cert.g;
  j["p"] = cert.p;
  j["trials"] = cert.trials;
  j["successes"] = cert.successes;
  j["confidence"] = cert.confidence;
  j["q_lo"] = cert.q_lo;
  j["ln_lower_bound"] = cert.ln_lower_bound.finite() ? json(cert.ln_lower_bound.nats) : json();
  j["seed"] = common.seed;
  emit_object(common, j);
  return kExitOk;
}

int run_concentration(const std::string& input, double eps, std::size_t trials, bool general,
                      const CommonOptions& common) {
  const auto h = read_instance_file(input);
  const auto r = check_concentration(h, eps, trials, common.seed,
                                     general ? ClaimKind::general : ClaimKind::linear);
  json j;
  j["input"] = input;
  j["claim"] = general ? "general" : "linear";
  j["p"] = r.p;
  j["trials"] = r.trials;
  j["n"] = r.n;
  j["t_avg"] = r.t;
  j["eps"] = r.eps;
  j["lambda"] = r.lambda;
  j["expected_m"] = r.expected_m;
  j["threshold"] = r.threshold;
  j["empirical_mean"] = r.empirical_mean;
  j["empirical_sd"] = r.empirical_sd;
  j["exceed_fraction"] = r.exceed_fraction;
  j["claim_target"] = r.claim_target;
  j["seed"] = common.seed;
  emit_object(common, j);
  return kExitOk;
}

// --- bound -------------------------------------------------------------------

struct BoundArgs {
  std::string which;
  double n = 0;
  double t = 0;
  std::size_t k = 1;
  std::optional<double> eps;
  double c = 1.0;
  std::string f = "shearer";
  bool linear = true;
  std::optional<std::size_t> alpha;
};

int run_bound(const BoundArgs& a, const CommonOptions& common) {
  json j;
  j["which"] = a.which;
  json params = {{"n", a.n}};
  std::string notes;
  double value = 0;
  if (a.which == "thm1") {
    params["t"] = a.t;
    value = thm1_lower(a.n, a.t).nats;
    params["first_branch"] = thm1_first_branch(a.n, a.t);
    params["neighborhood_branch"] = a.t * std::numbers::ln2;
  } else if (a.which == "thm1c") {
    value = thm1_consequence(a.n).nats;
    params["minimizing_t"] = thm1_minimizing_degree(a.n);
    notes = "asymptotic target: o(1) term dropped";
  } else if (a.which == "thm2") {
    value = thm2_upper(a.n).nats;
    notes = "asymptotic target: o(1) term dropped";
  } else if (a.which == "thm3") {
    params["t"] = a.t;
    params["k"] = a.k;
    params["c"] = a.c;
    value = thm3_lower(a.n, a.t, a.k, a.c).nats;
    notes = "c is existential; supply an empirical estimate";
  } else if (a.which == "thm4") {
    BoundParams bp;
    bp.n = a.n;
    bp.t = a.t;
    bp.k = a.k;
    bp.linear = a.linear;
    bp.f = {parse_f_kind(a.f), a.c};
    bp.eps = a.eps.value_or(a.k == 1 ? kTriangleFreeEpsilon : linear_hypergraph_epsilon(a.k));
    const auto r = thm4_alpha_prime(bp);
    params["t"] = a.t;
    params["k"] = a.k;
    params["eps"] = bp.eps;
    params["linear"] = a.linear;
    params["f"] = bp.f.name();
    params["c"] = a.c;
    params["alpha_prime"] = r.alpha_prime;
    value = r.ln_bound.nats;
    notes = "valid for n >= n0(eps); n0 is not explicit";
  } else if (a.which == "binom") {
    if (!a.alpha) throw InvalidInput("bound --which binom needs --alpha");
    params["alpha"] = *a.alpha;
    value = binomial_sum_upper(static_cast<std::size_t>(a.n), *a.alpha).nats;
    notes = "ln of the exact partial binomial sum, i = 0..alpha";
  } else if (a.which == "eq1") {
    params["t"] = a.t;
    value = eq1_lower(a.n, a.t).nats;
  } else {
    throw InvalidInput("unknown bound '" + a.which + "'");
  }
  j["params"] = params;
  j["ln_value"] = value;
  j["notes"] = notes;
  emit_object(common, j);
  return kExitOk;
}

// --- experiment ----------------------------------------------------------------

struct ExperimentArgs {
  std::string config_path;
  std::string kind;
  bool stable = false;
};

int run_experiment(const ExperimentArgs& a, const CommonOptions& common, bool seed_given) {
  ExperimentConfig config;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw InvalidInput("cannot open config '" + a.config_path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidInput("config '" + a.config_path + "' is not valid JSON: " + e.what());
    }
    config = ExperimentConfig::from_json(j);
  } else if (!a.kind.empty()) {
    config.kind = parse_experiment_kind(a.kind);
  } else {
    throw InvalidInput("experiment needs --config or --kind");
  }
  if (!a.kind.empty()) config.kind = parse_experiment_kind(a.kind);
  if (seed_given) config.seed = common.seed;
  if (a.stable) config.stable = true;

  CommonOptions out = common;
  if (out.output.empty()) out.output = config.output;

  const Report report = run(config);
  emit(out, common.format == "csv" ? report.to_csv() : report.dump(config.stable));
  return report.passed() ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count, bound and certify independent sets in graphs and uniform hypergraphs"};
  app.require_subcommand(1);

  CommonOptions common;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate an instance in the text format");
  generate->add_option("--family", gen.family, "Instance family")
      ->check(CLI::IsMember(
          {"tfp", "blowup", "linear", "gnp", "hyper-gnp", "path", "cycle", "complete", "empty"}))
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Vertex count")->capture_default_str();
  generate->add_option("--k", gen.k, "Edges have k+1 vertices (linear, hyper-gnp)")
      ->capture_default_str();
  generate->add_option("--m", gen.m, "Edge count (linear)")->capture_default_str();
  generate->add_option("--r", gen.r, "Blow-up factor; 0 picks max(1, round(ln(n)/2))")
      ->capture_default_str();
  generate->add_option("--p", gen.p, "Edge probability (gnp, hyper-gnp)")->capture_default_str();
  generate->add_option("--max-attempts", gen.max_attempts,
                       "Consecutive rejections before giving up (linear; 0 = 1000 m)");
  generate->add_option("--input", gen.input, "Base graph for --family blowup");
  generate->add_option("--meta", gen.meta, "JSON sidecar path (default: OUTPUT.json)");
  add_common(generate, common);

  std::string count_input;
  bool brute = false;
  std::uint64_t count_budget = kDefaultNodeBudget;
  auto* count = app.add_subcommand("count", "Exact number of independent sets (empty set included)");
  count->add_option("--input", count_input, "Instance file")->required();
  count->add_flag("--brute-force", brute, "Enumerate all subsets (n <= 25)");
  count->add_option("--budget", count_budget, "Branch-node budget")->capture_default_str();
  add_common(count, common);

  std::string alpha_input;
  bool exact_flag = false;
  bool greedy_flag = false;
  std::uint64_t alpha_budget = kDefaultNodeBudget;
  auto* alpha = app.add_subcommand("alpha", "Independence number (exact or greedy)");
  alpha->add_option("--input", alpha_input, "Instance file")->required();
  auto* exact_opt = alpha->add_flag("--exact", exact_flag, "Branch and bound (default)");
  alpha->add_flag("--greedy", greedy_flag, "Random-order greedy maximal set")->excludes(exact_opt);
  alpha->add_option("--budget", alpha_budget, "Branch-node budget")->capture_default_str();
  add_common(alpha, common);

  BoundArgs bargs;
  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form bound on ln i(H)");
  bound->add_option("--which", bargs.which, "Bound to evaluate")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm1c", "thm2", "thm3", "thm4", "binom", "eq1"}));
  bound->add_option("--n", bargs.n, "Vertex count")->required();
  bound->add_option("--t", bargs.t, "Average degree");
  bound->add_option("--k", bargs.k, "Uniformity parameter (edges have k+1 vertices)")
      ->capture_default_str();
  bound->add_option("--eps", bargs.eps, "Epsilon in (0, 4/(k+1)); thm4 defaults to 21/12 or 3/(k+1)");
  bound->add_option("--c", bargs.c, "Constant for thm3, dlr or const f")->capture_default_str();
  bound->add_option("--f", bargs.f, "f(t) for thm4")
      ->check(CLI::IsMember({"shearer", "dlr", "const"}))
      ->capture_default_str();
  bound->add_option("--linear", bargs.linear, "Use the linear-hypergraph branch of thm4")
      ->capture_default_str();
  bound->add_option("--alpha", bargs.alpha, "Independence number for binom");
  add_common(bound, common);

  CertifyArgs cargs;
  auto* certify = app.add_subcommand("certify", "Sampling lower-bound certificate for ln i(H)");
  certify->add_option("--input", cargs.input, "Instance file")->required();
  certify->add_option("--p", cargs.p, "Vertex sampling probability")->required();
  certify->add_option("--g", cargs.g, "Target independent-set size")->required();
  certify->add_option("--trials", cargs.trials, "Number of samples")->capture_default_str();
  certify->add_option("--confidence", cargs.confidence, "Confidence level")->capture_default_str();
  certify->add_option("--budget", cargs.budget, "Branch-node budget per sample")
      ->capture_default_str();
  add_common(certify, common);

  std::string conc_input;
  double conc_eps = 1.0;
  std::size_t conc_trials = 500;
  bool linear_claim = false;
  bool general_claim = false;
  auto* conc = app.add_subcommand("concentration", "Degree-sum concentration of random samples");
  conc->add_option("--input", conc_input, "Instance file")->required();
  conc->add_option("--eps", conc_eps, "Epsilon in (0, 4/(k+1))")->capture_default_str();
  conc->add_option("--trials", conc_trials, "Number of samples (>= 100)")->capture_default_str();
  auto* lin_opt = conc->add_flag("--linear-claim", linear_claim, "p = t^(-1/(k+1)) (default)");
  conc->add_flag("--general-claim", general_claim, "p = t^((eps-1)/(k(2k+1)))")->excludes(lin_opt);
  add_common(conc, common);

  ExperimentArgs eargs;
  auto* experiment = app.add_subcommand("experiment", "Run an experiment and write a JSON report");
  experiment->add_option("--config", eargs.config_path, "Experiment config (JSON)");
  experiment->add_option("--kind", eargs.kind, "Experiment kind (overrides the config)")
      ->check(CLI::IsMember({"thm1-verify", "thm3-verify", "blowup-verify", "certify-vs-exact",
                             "concentration", "tfp-stats", "bound-table"}));
  experiment->add_flag("--stable", eargs.stable, "Omit timings for byte-identical reports");
  add_common(experiment, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return run_generate(gen, common);
    if (*count) return run_count(count_input, brute, count_budget, common);
    if (*alpha) return run_alpha(alpha_input, greedy_flag, alpha_budget, common);
    if (*bound) return run_bound(bargs, common);
    if (*certify) return run_certify(cargs, common);
    if (*conc) return run_concentration(conc_input, conc_eps, conc_trials, general_claim, common);
    if (*experiment) {
      const bool seed_given = experiment->count("--seed") > 0;
      return run_experiment(eargs, common, seed_given);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
