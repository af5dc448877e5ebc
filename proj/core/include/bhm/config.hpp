#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bhm/sampling.hpp"

namespace bhm {

/// One experiment run: the ensemble plus Monte Carlo and series sizes.
struct ExperimentConfig {
  EnsembleSpec ensemble;
  std::vector<int> n_values{50, 100, 200};
  int s_max = 6;
  int trials_lhs = 2000;
  int trials_rhs = 2000;
  int laurent_order = 8;
  std::optional<Complex> z_eval;
  double tolerance_sigmas = 3.0;

  /// (C + 1)(p + 2), the a-priori bound on the operator norm.
  double norm_bound() const;
  /// z_eval, defaulting to 3 (C + 1)(p + 2).
  Complex evaluation_point() const;
  /// Throws ConfigError on inconsistent fields; `pointwise` also checks |z_eval|.
  void validate(bool pointwise) const;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Canonical JSON form; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const ExperimentConfig& cfg);
/// FNV-1a 64 of the canonical form.
std::uint64_t config_hash(const ExperimentConfig& cfg);

}  // namespace bhm
