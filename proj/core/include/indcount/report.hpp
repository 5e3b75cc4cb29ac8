#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace indcount {

/// One tested inequality `lhs op rhs` with both sides recorded.
///
/// Hard verdicts compare exact quantities (or a big-integer logarithm against
/// a closed form) and decide the exit status of a run. Statistical verdicts
/// check asymptotic or probabilistic statements against a band and are
/// reported only.
struct Verdict {
  enum class Kind { hard, statistical };

  std::string inequality;
  double lhs = 0;
  double rhs = 0;
  Kind kind = Kind::hard;
  bool pass = false;
  std::string lhs_exact;  // decimal big integers, when the comparison was exact
  std::string rhs_exact;
  std::string note;
};

nlohmann::json to_json(const Verdict& v);

class Report {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit Report(std::string kind) : kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

  nlohmann::json& config() noexcept { return config_; }
  nlohmann::json& summary() noexcept { return summary_; }
  const nlohmann::json& summary() const noexcept { return summary_; }
  const nlohmann::json& rows() const noexcept { return rows_; }

  /// Attaches a verdict to `row` (under "verdicts") and updates the tallies.
  void add_verdict(nlohmann::json& row, const Verdict& v);
  void add_summary_verdict(const Verdict& v);
  /// Appends a finished row; `seconds` is only emitted outside stable mode.
  void add_row(nlohmann::json row, double seconds = 0.0);
  void append_rows(const Report& other);

  std::size_t hard_checks() const noexcept { return hard_checks_; }
  std::size_t hard_failures() const noexcept { return hard_failures_; }
  std::size_t statistical_checks() const noexcept { return statistical_checks_; }
  std::size_t statistical_failures() const noexcept { return statistical_failures_; }
  bool passed() const noexcept { return hard_failures_ == 0; }

  void set_wall_seconds(double s) noexcept { wall_seconds_ = s; }

  /// In stable mode all timings are omitted so identical configurations give
  /// byte-identical output.
  nlohmann::json to_json(bool stable) const;
  std::string dump(bool stable) const;
  /// One CSV line per row, scalar fields only, columns in first-seen order.
  std::string to_csv() const;

 private:
  void tally(const Verdict& v);

  std::string kind_;
  nlohmann::json config_ = nlohmann::json::object();
  nlohmann::json rows_ = nlohmann::json::array();
  nlohmann::json summary_ = nlohmann::json::object();
  nlohmann::json summary_verdicts_ = nlohmann::json::array();
  std::vector<double> row_seconds_;
  double wall_seconds_ = 0;
  std::size_t hard_checks_ = 0;
  std::size_t hard_failures_ = 0;
  std::size_t statistical_checks_ = 0;
  std::size_t statistical_failures_ = 0;
};

}  // namespace indcount
