#include "bhm/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bhm/errors.hpp"

namespace bhm {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key)) throw ConfigError(where + ": unknown key '" + key + "'");
}

Rational rational_of(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.dump());
    if (v.is_number()) return parse_rational(v.dump());
  } catch (const std::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ": expected a number or a rational string");
}

/// A scalar is a real (number or "p/q" string) or a [re, im] pair.
ExactComplex scalar_of(const json& v, const std::string& where) {
  if (v.is_array()) {
    if (v.size() != 2) throw ConfigError(where + ": complex values are [re, im]");
    return {rational_of(v[0], where), rational_of(v[1], where)};
  }
  return ExactComplex(rational_of(v, where));
}

std::string rational_text(const Rational& q) { return q.get_str(); }

json scalar_json(const ExactComplex& c) {
  if (c.is_real()) return rational_text(c.real());
  return json::array({rational_text(c.real()), rational_text(c.imag())});
}

Distribution distribution_of(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type")) throw ConfigError(where + ": missing 'type'");
  const auto type = j.at("type").get<std::string>();
  Distribution d = Distribution::constant(ExactComplex(0L));
  try {
    if (type == "constant") {
      reject_unknown(j, {"type", "value", "bound"}, where);
      d = Distribution::constant(scalar_of(j.at("value"), where));
    } else if (type == "atoms") {
      reject_unknown(j, {"type", "values", "probs", "bound"}, where);
      std::vector<ExactComplex> values;
      std::vector<Rational> probs;
      for (const auto& v : j.at("values")) values.push_back(scalar_of(v, where));
      for (const auto& q : j.at("probs")) probs.push_back(rational_of(q, where));
      d = Distribution::atoms(std::move(values), std::move(probs));
    } else if (type == "uniform") {
      reject_unknown(j, {"type", "lo", "hi", "bound"}, where);
      d = Distribution::uniform(rational_of(j.at("lo"), where), rational_of(j.at("hi"), where));
    } else {
      throw ConfigError(where + ": unknown distribution type '" + type + "'");
    }
    if (j.contains("bound")) d.set_bound(j.at("bound").get<double>());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return d;
}

json distribution_json(const Distribution& d) {
  json j = std::visit(
      [](const auto& l) -> json {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ConstantLaw>) {
          return {{"type", "constant"}, {"value", scalar_json(l.value)}};
        } else if constexpr (std::is_same_v<T, AtomLaw>) {
          json values = json::array();
          json probs = json::array();
          for (const auto& v : l.values) values.push_back(scalar_json(v));
          for (const auto& q : l.probs) probs.push_back(rational_text(q));
          return {{"type", "atoms"}, {"values", values}, {"probs", probs}};
        } else {
          return {{"type", "uniform"}, {"lo", rational_text(l.lo)}, {"hi", rational_text(l.hi)}};
        }
      },
      d.law());
  j["bound"] = d.bound();
  return j;
}

}  // namespace

double ExperimentConfig::norm_bound() const {
  return (ensemble.bound() + 1.0) * (ensemble.p + 2);
}

Complex ExperimentConfig::evaluation_point() const {
  return z_eval.value_or(Complex(3.0 * norm_bound(), 0.0));
}

void ExperimentConfig::validate(bool pointwise) const {
  ensemble.validate();
  if (ensemble.p < 1) throw ConfigError("ensemble: p must be at least 1");
  if (n_values.empty()) throw ConfigError("n_values must not be empty");
  for (int n : n_values)
    if (n < 1) throw ConfigError("n_values entries must be positive");
  if (s_max < 0) throw ConfigError("s_max must be nonnegative");
  if (trials_lhs < 1 || trials_rhs < 1) throw ConfigError("trial counts must be positive");
  if (laurent_order < s_max + 1) throw ConfigError("laurent_order must be at least s_max + 1");
  if (!(tolerance_sigmas > 0.0)) throw ConfigError("tolerance_sigmas must be positive");
  if (pointwise && std::abs(evaluation_point()) < 2.0 * norm_bound()) {
    std::ostringstream msg;
    msg << "|z_eval| = " << std::abs(evaluation_point()) << " is below 2(C+1)(p+2) = "
        << 2.0 * norm_bound();
    throw ConfigError(msg.str());
  }
}

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(root,
                 {"ensemble", "n_values", "s_max", "trials_lhs", "trials_rhs", "laurent_order",
                  "z_eval", "tolerance_sigmas"},
                 "config");
  ExperimentConfig cfg;
  try {
    const auto& ens = root.at("ensemble");
    reject_unknown(ens, {"p", "seed", "mus"}, "ensemble");
    cfg.ensemble.p = ens.at("p").get<int>();
    cfg.ensemble.seed = ens.value("seed", std::uint64_t{0});
    int k = 0;
    for (const auto& m : ens.at("mus"))
      cfg.ensemble.mus.push_back(distribution_of(m, "ensemble.mus[" + std::to_string(k++) + "]"));
    if (root.contains("n_values")) cfg.n_values = root.at("n_values").get<std::vector<int>>();
    cfg.s_max = root.value("s_max", cfg.s_max);
    cfg.trials_lhs = root.value("trials_lhs", cfg.trials_lhs);
    cfg.trials_rhs = root.value("trials_rhs", cfg.trials_rhs);
    cfg.laurent_order = root.value("laurent_order", cfg.s_max + 2);
    if (root.contains("z_eval") && !root.at("z_eval").is_null()) {
      const auto& z = root.at("z_eval");
      if (z.is_array() && z.size() == 2)
        cfg.z_eval = Complex(z[0].get<double>(), z[1].get<double>());
      else if (z.is_number())
        cfg.z_eval = Complex(z.get<double>(), 0.0);
      else
        throw ConfigError("z_eval must be a number, [re, im] or null");
    }
    cfg.tolerance_sigmas = root.value("tolerance_sigmas", cfg.tolerance_sigmas);
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate(false);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  json mus = json::array();
  for (const auto& d : cfg.ensemble.mus) mus.push_back(distribution_json(d));
  json root = {
      {"ensemble", {{"p", cfg.ensemble.p}, {"seed", cfg.ensemble.seed}, {"mus", mus}}},
      {"n_values", cfg.n_values},
      {"s_max", cfg.s_max},
      {"trials_lhs", cfg.trials_lhs},
      {"trials_rhs", cfg.trials_rhs},
      {"laurent_order", cfg.laurent_order},
      {"tolerance_sigmas", cfg.tolerance_sigmas},
  };
  root["z_eval"] = cfg.z_eval ? json::array({cfg.z_eval->real(), cfg.z_eval->imag()}) : json(nullptr);
  return root.dump(2);
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_config(cfg)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace bhm
