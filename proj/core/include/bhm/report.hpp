#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bhm/scalar.hpp"

namespace bhm {

enum class Verdict { pass, fail, inconclusive, info };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// One compared quantity: a moment order, a monomial, an identity check.
struct ReportRow {
  std::string experiment;
  std::string key;
  Complex lhs;
  double se_lhs = 0.0;
  Complex rhs;
  double se_rhs = 0.0;
  /// Deterministic slack added to the statistical tolerance (series tails, rounding).
  double allowance = 0.0;
  Verdict verdict = Verdict::info;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ExperimentReport {
  std::string name;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
  std::string scalar_path = "float";
  std::map<std::string, std::string> metadata;
  std::vector<ReportRow> rows;
  std::optional<double> runtime_seconds;

  bool passed() const;
  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// pass iff |lhs - rhs| <= tol * sqrt(se_lhs^2 + se_rhs^2) + allowance.
Verdict judge(Complex lhs, double se_lhs, Complex rhs, double se_rhs, double tol_sigmas,
              double allowance);

/// Fills row.verdict via judge().
void judge_row(ReportRow& row, double tol_sigmas);

std::string to_json(const std::vector<ExperimentReport>& reports);
std::vector<ExperimentReport> reports_from_json(const std::string& text);
/// One header line, then one row per ReportRow across all reports.
std::string to_csv(const std::vector<ExperimentReport>& reports);

/// %.17g formatting.
std::string format_double(double v);

}  // namespace bhm
