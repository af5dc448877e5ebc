#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhm/report.hpp"

namespace bhm {

/// Names of the deterministic checks, in execution order.
inline const std::vector<std::string>& identity_check_names() {
  static const std::vector<std::string> names{
      "polynomial.derivative",   "polynomial.row_expansion",        "polynomial.resolvent",
      "hermite_pade.contact", "weyl.shift_relations",         "weyl.product_expansion",
      "two_sided.central_coefficient", "two_sided.vanishing", "two_sided.w0_expansion"};
  return names;
}

struct IdentitySuiteOptions {
  std::uint64_t base_seed = 0;
  /// Restrict to these checks; empty runs all of them.
  std::vector<std::string> checks;
  int p_max = 3;
  int n_max = 12;
  /// Draws per grid point, per check.
  int seeds_polynomial = 50;
  int seeds_resolvent = 100;
  int seeds_contact = 20;
  int seeds_weyl = 50;
  int seeds_central = 100;
  int seeds_vanishing = 50;
  int seeds_w0 = 50;
  /// Single-matrix mode: only this draw index at every grid point.
  std::optional<std::uint64_t> single_seed;
  /// Corrupts one input entry on one side of the named check.
  std::optional<std::string> inject;
  int threads = 1;
};

/// A failing case, sufficient to rerun it via single_seed.
struct IdentityFailure {
  std::string check;
  std::uint64_t seed = 0;
  int p = 0;
  int n = 0;
  std::string detail;

  friend bool operator==(const IdentityFailure&, const IdentityFailure&) = default;
};

struct IdentityCheckSummary {
  std::string check;
  long cases = 0;
  long failures = 0;
  double seconds = 0.0;
};

struct IdentitySuiteResult {
  std::vector<IdentityCheckSummary> checks;
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};

IdentitySuiteResult run_identity_checks(const IdentitySuiteOptions& opts);

/// One row per check (lhs = failure count, rhs = 0) with reproducers in the metadata.
ExperimentReport identity_report(const IdentitySuiteResult& result, const IdentitySuiteOptions& opts,
                                 std::uint64_t config_hash = 0, bool timing = false);

/// Integer entries in [-3, 3] for draw `seed` at grid point (p, length) of `check`.
std::vector<std::vector<long>> identity_entries(std::uint64_t base_seed, const std::string& check,
                                                int p, int n, std::uint64_t seed,
                                                const std::vector<int>& lengths);

}  // namespace bhm
