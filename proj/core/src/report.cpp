#include "indcount/report.hpp"

#include <algorithm>
#include <sstream>

namespace indcount {

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["inequality"] = v.inequality;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  j["kind"] = v.kind == Verdict::Kind::hard ? "hard" : "statistical";
  j["pass"] = v.pass;
  if (!v.lhs_exact.empty()) j["lhs_exact"] = v.lhs_exact;
  if (!v.rhs_exact.empty()) j["rhs_exact"] = v.rhs_exact;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

void Report::tally(const Verdict& v) {
  if (v.kind == Verdict::Kind::hard) {
    ++hard_checks_;
    hard_failures_ += v.pass ? 0 : 1;
  } else {
    ++statistical_checks_;
    statistical_failures_ += v.pass ? 0 : 1;
  }
}

void Report::add_verdict(nlohmann::json& row, const Verdict& v) {
  tally(v);
  row["verdicts"].push_back(indcount::to_json(v));
}

void Report::add_summary_verdict(const Verdict& v) {
  tally(v);
  summary_verdicts_.push_back(indcount::to_json(v));
}

void Report::add_row(nlohmann::json row, double seconds) {
  rows_.push_back(std::move(row));
  row_seconds_.push_back(seconds);
}

void Report::append_rows(const Report& other) {
  for (std::size_t i = 0; i < other.rows_.size(); ++i) {
    rows_.push_back(other.rows_[i]);
    row_seconds_.push_back(other.row_seconds_[i]);
  }
  hard_checks_ += other.hard_checks_;
  hard_failures_ += other.hard_failures_;
  statistical_checks_ += other.statistical_checks_;
  statistical_failures_ += other.statistical_failures_;
}

nlohmann::json Report::to_json(bool stable) const {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind_;
  j["config"] = config_;
  j["rows"] = rows_;
  if (!stable) {
    for (std::size_t i = 0; i < rows_.size(); ++i) j["rows"][i]["seconds"] = row_seconds_[i];
    j["wall_seconds"] = wall_seconds_;
  }
  j["summary"] = summary_;
  j["summary"]["verdicts"] = summary_verdicts_;
  j["summary"]["hard_checks"] = hard_checks_;
  j["summary"]["hard_failures"] = hard_failures_;
  j["summary"]["statistical_checks"] = statistical_checks_;
  j["summary"]["statistical_failures"] = statistical_failures_;
  j["summary"]["passed"] = passed();
  return j;
}

std::string Report::dump(bool stable) const { return to_json(stable).dump(2) + "\n"; }

namespace {

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

}  // namespace

std::string Report::to_csv() const {
  std::vector<std::string> columns;
  for (const auto& row : rows_) {
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (it.value().is_structured()) continue;
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) {
        columns.push_back(it.key());
      }
    }
  }
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      if (row.contains(columns[c])) out << csv_cell(row[columns[c]]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace indcount
