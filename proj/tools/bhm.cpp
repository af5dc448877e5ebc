// bhm: moment comparisons and identity checks for random banded Hessenberg matrices.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bhm/config.hpp"
#include "bhm/errors.hpp"
#include "bhm/experiments.hpp"
#include "bhm/identity_suite.hpp"
#include "bhm/report.hpp"

namespace {

// p = 1, zero main diagonal, Bernoulli +-1 subdiagonal.
constexpr const char* kDefaultConfig = R"({
  "ensemble": {
    "p": 1,
    "seed": 0,
    "mus": [
      {"type": "constant", "value": "0"},
      {"type": "atoms", "values": ["-1", "1"], "probs": ["1/2", "1/2"]}
    ]
  }
})";

struct Cli {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  bool exact = false;
  bool use_float = false;
  int threads = 1;
  bool timing = false;
  int degree = 2;
  int r_max = 3;
  std::optional<std::uint64_t> single_seed;
  std::optional<std::string> inject;
  std::vector<std::string> checks;
};

bhm::ExperimentConfig load(const Cli& cli) {
  auto cfg = cli.config_path.empty() ? bhm::parse_config(kDefaultConfig)
                                     : bhm::load_config(cli.config_path);
  if (cli.seed) cfg.ensemble.seed = *cli.seed;
  return cfg;
}

bhm::ExperimentReport identities(const Cli& cli, const bhm::ExperimentConfig& cfg) {
  bhm::IdentitySuiteOptions o;
  o.base_seed = cfg.ensemble.seed;
  o.single_seed = cli.single_seed;
  o.inject = cli.inject;
  o.checks = cli.checks;
  o.threads = cli.threads;
  return bhm::identity_report(bhm::run_identity_checks(o), o, bhm::config_hash(cfg), cli.timing);
}

std::vector<bhm::ExperimentReport> run(const std::string& command, const Cli& cli) {
  const auto cfg = load(cli);
  const bhm::RunOptions opts{cli.threads, cli.exact && !cli.use_float, cli.timing};
  const auto r_list = bhm::default_r_list(cfg.ensemble.p, cli.r_max);
  if (command == "identities") return {identities(cli, cfg)};
  if (command == "moments") return {bhm::run_moments(cfg, opts)};
  if (command == "compare") return {bhm::compare_theorem_main(cfg, opts)};
  if (command == "gsuite") return {bhm::run_g_suite(cfg, r_list, opts)};
  if (command == "invariance") return {bhm::run_invariance(cfg, cli.degree, opts)};
  return {identities(cli, cfg), bhm::compare_theorem_main(cfg, opts),
          bhm::run_g_suite(cfg, r_list, opts), bhm::run_invariance(cfg, cli.degree, opts)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral moments of random banded Hessenberg matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Cli cli;
  app.add_option("--config", cli.config_path, "Experiment configuration (JSON)")->check(CLI::ExistingFile);
  app.add_option("--seed", cli.seed, "Override the ensemble seed");
  app.add_option("--out", cli.out, "Write the report here instead of stdout");
  app.add_option("--format", cli.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  auto* exact = app.add_flag("--exact", cli.exact, "Rational arithmetic for moment paths");
  auto* flt = app.add_flag("--float", cli.use_float, "Floating-point arithmetic (default)");
  exact->excludes(flt);
  app.add_option("--threads", cli.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timing", cli.timing, "Record runtimes (reports are then not reproducible)");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"identities", "Deterministic identity suite on integer matrices"},
      {"moments", "LHS and RHS moment estimates"},
      {"compare", "Moment and pointwise comparison at the largest n"},
      {"gsuite", "g-function recursion and E W(z) expansion"},
      {"invariance", "Invariance principle for monomials of the Weyl vector"},
      {"all", "identities, compare, gsuite and invariance"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (name == "identities" || name == "all") {
      sub->add_option("--single-seed", cli.single_seed, "Run only this draw index");
      sub->add_option("--inject", cli.inject, "Corrupt one input of the named check");
      sub->add_option("--check", cli.checks, "Restrict to these checks");
    }
    if (name == "invariance" || name == "all")
      sub->add_option("--degree", cli.degree, "Maximum monomial degree")->check(CLI::NonNegativeNumber);
    if (name == "gsuite" || name == "all")
      sub->add_option("--r-max", cli.r_max, "Maximum |r| for the g-suite")->check(CLI::NonNegativeNumber);
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto reports = run(command, cli);
    const std::string text = cli.format == "csv" ? bhm::to_csv(reports) : bhm::to_json(reports);
    if (cli.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cli.out, std::ios::binary);
      if (!f) throw bhm::ConfigError("cannot write " + cli.out);
      f << text;
    }
    bool ok = true;
    for (const auto& r : reports) {
      ok = ok && r.passed();
      std::cerr << r.name << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
  } catch (const bhm::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
