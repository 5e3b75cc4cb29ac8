// Acceptance driver: one PASS/FAIL line per criterion.
//
//   indcount_acceptance               run every criterion
//   indcount_acceptance --criterion N run only criterion N
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "indcount/bounds.hpp"
#include "indcount/counting.hpp"
#include "indcount/experiments.hpp"
#include "indcount/generators.hpp"
#include "indcount/rng.hpp"

using namespace indcount;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

// --- configurations shared by the criteria and the determinism rerun ---------

ExperimentConfig thm1_config() {
  ExperimentConfig c;
  c.kind = ExperimentKind::thm1_verify;
  c.source.generator = GeneratorSpec{"tfp", 50, 20, 40, 1, 0, 0, 0, 2024};
  c.stable = true;
  return c;
}

ExperimentConfig thm3_config(std::uint64_t seed) {
  ExperimentConfig c;
  c.kind = ExperimentKind::thm3_verify;
  c.source.generator = GeneratorSpec{"linear", 30, 20, 30, 2, 2.0, 5.0, 0, seed};
  c.stable = true;
  return c;
}

ExperimentConfig certify_config(std::size_t repetitions) {
  ExperimentConfig c;
  c.kind = ExperimentKind::certify_vs_exact;
  c.source.generator = GeneratorSpec{"gnp", 50, 8, 20, 1, 0, 0, 0.3, 606};
  c.seed = 6;
  c.trials = 500;
  c.confidence = 0.95;
  c.p_list = {0.4, 0.6};
  c.repetitions = repetitions;
  c.stable = true;
  return c;
}

ExperimentConfig concentration_config() {
  ExperimentConfig c;
  c.kind = ExperimentKind::concentration;
  const double t = 3.0 * 4000 / 512;
  c.source.generator = GeneratorSpec{"linear", 1, 512, 512, 2, t, t, 0, 707};
  c.seed = 7;
  c.eps = 1.0;
  c.trials = 500;
  c.claim = ClaimKind::linear;
  c.stable = true;
  return c;
}

ExperimentConfig tfp_config() {
  ExperimentConfig c;
  c.kind = ExperimentKind::tfp_stats;
  c.n_list = {1024, 4096};
  c.seeds = {1, 2, 3, 4, 5};
  c.stable = true;
  return c;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))));
  }
  return out;
}

ExperimentConfig blowup_config() {
  ExperimentConfig c;
  c.kind = ExperimentKind::blowup_verify;
  c.source.generator = GeneratorSpec{"gnp", 20, 4, 6, 1, 0, 0, 0.4, 505};
  c.r = 2;
  c.stable = true;
  return c;
}

// --- criteria ------------------------------------------------------------------

Outcome oracle_equivalence() {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  const double probabilities[] = {0.1, 0.3, 0.5};
  for (std::size_t i = 0; i < 300; ++i) {
    Rng rng(derive_seed(101, i));
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_below(14));
    const auto g = random_graph(n, probabilities[i % 3], rng.next_u64());
    mismatches += count_exact(g) == count_brute_force(g) ? 0 : 1;
    ++instances;
  }
  for (std::size_t i = 0; i < 150; ++i) {
    Rng rng(derive_seed(102, i));
    const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform_below(12));
    const double p = probabilities[i % 3] * 0.5;
    const auto h = random_uniform_hypergraph(n, 2, p, rng.next_u64());
    mismatches += count_exact(h) == count_brute_force(h) ? 0 : 1;
    ++instances;
  }
  return {mismatches == 0 && instances >= 300,
          std::to_string(instances) + " instances (300 graphs, 150 3-uniform), " +
              std::to_string(mismatches) + " mismatches"};
}

Outcome closed_forms() {
  mpz_class fib_a = 2, fib_b = 3;     // F(3), F(4)
  mpz_class luc_a = 1, luc_b = 3;     // L(1), L(2)
  std::size_t failures = 0;
  for (std::size_t n = 3; n <= 30; ++n) {
    mpz_class f = fib_a + fib_b;      // F(n+2)
    fib_a = fib_b;
    fib_b = f;
    mpz_class l = luc_a + luc_b;      // L(n)
    luc_a = luc_b;
    luc_b = l;
    failures += count_exact(path_graph(n)) == BigCount(f) ? 0 : 1;
    failures += count_exact(cycle_graph(n)) == BigCount(l) ? 0 : 1;
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    std::vector<Vertex> e(k + 1);
    for (Vertex v = 0; v <= k; ++v) e[v] = v;
    const std::vector<std::vector<Vertex>> edges{e};
    const auto h = Hypergraph::from_edges(k + 1, k, edges);
    failures += count_exact(h) == BigCount((std::uint64_t{1} << (k + 1)) - 1) ? 0 : 1;
  }
  return {failures == 0, "P_n, C_n for n = 3..30 and single edges k = 1..6; " +
                             std::to_string(failures) + " failures; i(C_30) = " +
                             count_exact(cycle_graph(30)).to_string()};
}

Outcome triangle_free_lower_bound() {
  const auto report = run(thm1_config());
  const auto s = report.to_json(true)["summary"];
  return {report.passed() && report.hard_checks() == 50,
          std::to_string(report.hard_checks()) + " hard checks, " +
              std::to_string(report.hard_failures()) + " failures, min margin " +
              fmt(s.value("min_margin", 0.0)) + " nats"};
}

Outcome linear_constant() {
  const auto a = run(thm3_config(31));
  const auto b = run(thm3_config(32));
  const double min_a = a.summary().value("min_ratio", 0.0);
  const double min_b = b.summary().value("min_ratio", 0.0);
  std::size_t evaluated = a.summary().value("evaluated", std::size_t{0}) +
                          b.summary().value("evaluated", std::size_t{0});
  const bool positive = min_a > 0 && min_b > 0;
  const double spread = positive ? std::max(min_a, min_b) / std::min(min_a, min_b) : 0;
  return {positive && spread <= 2.0 && evaluated == 60,
          "min ratio batch A " + fmt(min_a) + ", batch B " + fmt(min_b) + ", spread x" +
              fmt(spread, 4) + " over " + std::to_string(evaluated) + " instances"};
}

Outcome blowup_claim() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<VertexPair> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<VertexPair> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) edges.push_back(pairs[i]);
      const auto g = Graph::from_edges(n, edges);
      if (is_triangle_free(g)) {
        graphs.emplace_back("tf-n" + std::to_string(n) + "-" + std::to_string(mask), g);
      }
    }
  }
  const std::size_t triangle_free = graphs.size();
  std::vector<VertexPair> k6;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) k6.emplace_back(u, v);
  Rng rng(505);
  std::set<std::uint32_t> chosen;
  while (chosen.size() < 500) chosen.insert(static_cast<std::uint32_t>(rng.uniform_below(1u << 15)));
  for (std::uint32_t mask : chosen) {
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < k6.size(); ++i)
      if (mask >> i & 1u) edges.push_back(k6[i]);
    graphs.emplace_back("n6-" + std::to_string(mask), Graph::from_edges(6, edges));
  }

  Report report("blowup-verify");
  BlowupCheckOptions options;
  for (const auto& [name, g] : graphs) {
    for (std::size_t r = 1; r <= 3; ++r) append_blowup_rows(report, name, g, r, options);
  }
  return {report.passed(), std::to_string(triangle_free) + " triangle-free graphs on n <= 5 + 500 " +
                               "random graphs on 6 vertices, r = 1..3: " +
                               std::to_string(report.hard_checks()) + " hard checks, " +
                               std::to_string(report.hard_failures()) + " failures"};
}

Outcome certificate_soundness() {
  const auto report = run(certify_config(20));
  const auto& s = report.summary();
  const double fraction = s.value("sound_fraction", 0.0);
  const double p_value = s.value("binomial_p_value", 0.0);
  return {fraction >= 0.95 && p_value >= 0.01,
          std::to_string(s.value("sound", std::size_t{0})) + "/" +
              std::to_string(s.value("certificates", std::size_t{0})) +
              " certificates sound (fraction " + fmt(fraction) + "), binomial p-value " +
              fmt(p_value)};
}

Outcome concentration() {
  const auto report = run(concentration_config());
  const auto& row = report.rows().at(0);
  return {report.statistical_failures() == 0 && report.statistical_checks() == 2,
          "p " + fmt(row["p"].get<double>()) + ", mean " +
              fmt(row["empirical_mean"].get<double>()) + " vs n t p^3 " +
              fmt(row["expected_m"].get<double>()) + ", exceed fraction " +
              fmt(row["exceed_fraction"].get<double>())};
}

Outcome process_bands() {
  const auto report = run(tfp_config());
  double lo_deg = 1e9, hi_deg = 0, lo_alpha = 1e9, hi_alpha = 0;
  for (const auto& row : report.rows()) {
    const double d = row["max_degree_ratio"].get<double>();
    const double a = row["greedy_alpha_ratio"].get<double>();
    lo_deg = std::min(lo_deg, d);
    hi_deg = std::max(hi_deg, d);
    lo_alpha = std::min(lo_alpha, a);
    hi_alpha = std::max(hi_alpha, a);
  }
  return {report.passed() && report.statistical_failures() == 0 && report.rows().size() == 10,
          "degree ratio in [" + fmt(lo_deg, 4) + ", " + fmt(hi_deg, 4) + "], greedy alpha ratio in [" +
              fmt(lo_alpha, 4) + ", " + fmt(hi_alpha, 4) + "]"};
}

Outcome bound_consistency() {
  std::size_t points = 0;
  double worst_rel = 0;
  std::size_t dominance_failures = 0;
  std::string first_failure;
  for (double n : log_spaced(1e2, 1e6, 10)) {
    for (double t : log_spaced(std::exp(2.0), std::pow(n, 0.49), 10)) {
      ++points;
      BoundParams bp{n, t, 1, kTriangleFreeEpsilon, true, {}};
      const double via4 = thm4_alpha_prime(bp).ln_bound.nats;
      const double first = thm1_first_branch(n, t);
      const double rel = via4 == first ? 0.0 : std::fabs(via4 - first) / std::fabs(first);
      worst_rel = std::max(worst_rel, rel);
      const double eq1 = eq1_lower(n, t).nats;
      const double thm1 = thm1_lower(n, t).nats;
      if (eq1 > thm1) {
        if (dominance_failures++ == 0) {
          first_failure = " (e.g. n " + fmt(n) + ", t " + fmt(t) + ": eq1 " + fmt(eq1) +
                          " > thm1 " + fmt(thm1) + ")";
        }
      }
    }
  }
  return {worst_rel <= 1e-12 && dominance_failures == 0,
          std::to_string(points) + " points; max relative gap " + fmt(worst_rel, 3) + "; eq1 > thm1 at " +
              std::to_string(dominance_failures) + " points" + first_failure};
}

Outcome determinism() {
  std::vector<ExperimentConfig> configs{thm1_config(),       thm3_config(31), blowup_config(),
                                        certify_config(2),   concentration_config(), tfp_config()};
  ExperimentConfig table;
  table.kind = ExperimentKind::bound_table;
  table.bound_n = log_spaced(1e2, 1e6, 10);
  table.stable = true;
  configs.push_back(table);
  std::size_t identical = 0;
  std::string differing;
  for (const auto& c : configs) {
    if (run(c).dump(true) == run(c).dump(true)) {
      ++identical;
    } else {
      differing += " " + to_string(c.kind);
    }
  }
  return {identical == configs.size(),
          std::to_string(identical) + "/" + std::to_string(configs.size()) +
              " stable reports byte-identical on rerun" + (differing.empty() ? "" : ";" + differing)};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", oracle_equivalence},
      {2, "closed forms", closed_forms},
      {3, "triangle-free lower bound on process graphs", triangle_free_lower_bound},
      {4, "linear hypergraph empirical constant", linear_constant},
      {5, "blow-up projection claim", blowup_claim},
      {6, "certificate soundness", certificate_soundness},
      {7, "degree-sum concentration", concentration},
      {8, "triangle-free process bands", process_bands},
      {9, "bound evaluator consistency", bound_consistency},
      {10, "determinism", determinism},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: indcount_acceptance [--criterion N]\n";
      return 2;
    }
  }

  bool all = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d, %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
