#include "bhm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bhm/errors.hpp"

namespace bhm {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::info: return "info";
  }
  return "info";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "inconclusive") return Verdict::inconclusive;
  if (s == "info") return Verdict::info;
  throw PreconditionViolation("unknown verdict '" + s + "'");
}

bool ExperimentReport::passed() const {
  return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) {
    return r.verdict == Verdict::fail || r.verdict == Verdict::inconclusive;
  });
}

Verdict judge(Complex lhs, double se_lhs, Complex rhs, double se_rhs, double tol_sigmas,
              double allowance) {
  const double gap = std::abs(lhs - rhs);
  const double band = tol_sigmas * std::hypot(se_lhs, se_rhs) + allowance;
  if (!std::isfinite(gap)) return Verdict::fail;
  return gap <= band ? Verdict::pass : Verdict::fail;
}

void judge_row(ReportRow& row, double tol_sigmas) {
  row.verdict = judge(row.lhs, row.se_lhs, row.rhs, row.se_rhs, tol_sigmas, row.allowance);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_number(double v) {
  // JSON has no non-finite numbers; they are written as strings.
  return std::isfinite(v) ? format_double(v) : quoted(format_double(v));
}

double number_of(const nlohmann::json& j) {
  if (j.is_string()) return std::stod(j.get<std::string>());
  return j.get<double>();
}

}  // namespace

std::string to_json(const std::vector<ExperimentReport>& reports) {
  std::ostringstream out;
  out << "{\n  \"reports\": [";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out << (i ? ",\n" : "\n") << "    {\n";
    out << "      \"name\": " << quoted(r.name) << ",\n";
    out << "      \"seed\": " << r.seed << ",\n";
    char hash[20];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.config_hash));
    out << "      \"config_hash\": " << quoted(hash) << ",\n";
    out << "      \"scalar_path\": " << quoted(r.scalar_path) << ",\n";
    out << "      \"passed\": " << (r.passed() ? "true" : "false") << ",\n";
    if (r.runtime_seconds) out << "      \"runtime_seconds\": " << json_number(*r.runtime_seconds) << ",\n";
    out << "      \"metadata\": {";
    std::size_t m = 0;
    for (const auto& [k, v] : r.metadata) out << (m++ ? ", " : "") << quoted(k) << ": " << quoted(v);
    out << "},\n      \"rows\": [";
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      const auto& row = r.rows[k];
      out << (k ? ",\n" : "\n") << "        {\"experiment\": " << quoted(row.experiment)
          << ", \"key\": " << quoted(row.key)
          << ", \"estimate_lhs\": [" << json_number(row.lhs.real()) << ", " << json_number(row.lhs.imag()) << "]"
          << ", \"se_lhs\": " << json_number(row.se_lhs)
          << ", \"estimate_rhs\": [" << json_number(row.rhs.real()) << ", " << json_number(row.rhs.imag()) << "]"
          << ", \"se_rhs\": " << json_number(row.se_rhs)
          << ", \"allowance\": " << json_number(row.allowance)
          << ", \"verdict\": " << quoted(to_string(row.verdict)) << "}";
    }
    out << (r.rows.empty() ? "]\n" : "\n      ]\n") << "    }";
  }
  out << (reports.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::vector<ExperimentReport> reports_from_json(const std::string& text) {
  const auto root = nlohmann::json::parse(text);
  std::vector<ExperimentReport> out;
  for (const auto& j : root.at("reports")) {
    ExperimentReport r;
    r.name = j.at("name").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.config_hash = std::stoull(j.at("config_hash").get<std::string>(), nullptr, 16);
    r.scalar_path = j.at("scalar_path").get<std::string>();
    if (j.contains("runtime_seconds")) r.runtime_seconds = number_of(j.at("runtime_seconds"));
    for (const auto& [k, v] : j.at("metadata").items()) r.metadata[k] = v.get<std::string>();
    for (const auto& row : j.at("rows")) {
      ReportRow rr;
      rr.experiment = row.at("experiment").get<std::string>();
      rr.key = row.at("key").get<std::string>();
      rr.lhs = {number_of(row.at("estimate_lhs")[0]), number_of(row.at("estimate_lhs")[1])};
      rr.se_lhs = number_of(row.at("se_lhs"));
      rr.rhs = {number_of(row.at("estimate_rhs")[0]), number_of(row.at("estimate_rhs")[1])};
      rr.se_rhs = number_of(row.at("se_rhs"));
      rr.allowance = number_of(row.at("allowance"));
      rr.verdict = verdict_from_string(row.at("verdict").get<std::string>());
      r.rows.push_back(std::move(rr));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_csv(const std::vector<ExperimentReport>& reports) {
  std::ostringstream out;
  out << "experiment,key,estimate_lhs,se_lhs,estimate_rhs,se_rhs,verdict,estimate_lhs_im,estimate_rhs_im\n";
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  for (const auto& r : reports)
    for (const auto& row : r.rows)
      out << field(row.experiment) << ',' << field(row.key) << ',' << format_double(row.lhs.real())
          << ',' << format_double(row.se_lhs) << ',' << format_double(row.rhs.real()) << ','
          << format_double(row.se_rhs) << ',' << to_string(row.verdict) << ','
          << format_double(row.lhs.imag()) << ',' << format_double(row.rhs.imag()) << '\n';
  return out.str();
}

}  // namespace bhm
