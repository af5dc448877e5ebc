#include "bhm/identity_suite.hpp"

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <span>
#include <tuple>

#include "bhm/banded.hpp"
#include "bhm/combinatorics.hpp"
#include "bhm/errors.hpp"
#include "parallel.hpp"
#include "bhm/sampling.hpp"
#include "bhm/two_sided.hpp"
#include "bhm/weyl.hpp"

namespace bhm {

namespace {

using E = ExactComplex;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr int kEntryBound = 3;
constexpr int kWeylOrder = 10;
constexpr int kCentralSite = 3;
constexpr int kCentralPower = 8;
constexpr int kVanishingN = 8;
constexpr int kVanishingP = 2;
constexpr int kW0MaxR = 6;
constexpr double kResolventTolerance = 1e-10;

struct Case {
  int p = 0;
  int n = 0;
  std::uint64_t seed = 0;
};

/// Empty on success, otherwise a description of the first mismatch.
using CaseFn = std::function<std::string(const Case&)>;

std::uint32_t check_lane(const std::string& check) {
  const auto& names = identity_check_names();
  const auto it = std::find(names.begin(), names.end(), check);
  if (it == names.end()) throw ConfigError("unknown identity check: " + check);
  return static_cast<std::uint32_t>(it - names.begin());
}

std::uint64_t case_trial(int p, int n, std::uint64_t seed) {
  return (static_cast<std::uint64_t>(p) << 56) | (static_cast<std::uint64_t>(n) << 40) |
         (seed & ((std::uint64_t{1} << 40) - 1));
}

template <class S>
std::vector<std::vector<S>> convert(const std::vector<std::vector<long>>& v) {
  std::vector<std::vector<S>> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    for (long x : v[k]) out[k].push_back(ScalarTraits<S>::from_int(x));
  return out;
}

template <class S>
BandedHessenberg<S> random_matrix(std::uint64_t base, const std::string& check, const Case& c) {
  std::vector<int> lengths;
  for (int k = 0; k <= c.p; ++k) lengths.push_back(std::max(c.n - k, 0));
  return BandedHessenberg<S>(c.n, c.p,
                             convert<S>(identity_entries(base, check, c.p, c.n, c.seed, lengths)));
}

template <class S>
DiagonalSequences<S> random_sequences(std::uint64_t base, const std::string& check, const Case& c,
                                      int length) {
  const std::vector<int> lengths(idx(c.p + 1), length);
  return DiagonalSequences<S>(c.p,
                              convert<S>(identity_entries(base, check, c.p, c.n, c.seed, lengths)));
}

template <class S>
TwoSidedWindow<S> random_window(std::uint64_t base, const std::string& check, const Case& c,
                                int half) {
  const std::vector<int> lengths(idx(c.p + 1), 2 * half + 1);
  return TwoSidedWindow<S>(c.p, half,
                           convert<S>(identity_entries(base, check, c.p, c.n, c.seed, lengths)));
}

template <class S>
BandedHessenberg<S> corrupted(BandedHessenberg<S> b) {
  b.coefficient(0, 1) += ScalarTraits<S>::one();
  return b;
}

template <class S>
DiagonalSequences<S> corrupted(const DiagonalSequences<S>& seqs) {
  std::vector<std::vector<S>> d;
  for (int k = 0; k <= seqs.bands(); ++k) d.emplace_back(seqs.diagonal(k).begin(), seqs.diagonal(k).end());
  d[0][0] += ScalarTraits<S>::one();
  return DiagonalSequences<S>(seqs.bands(), std::move(d));
}

template <class S>
TwoSidedWindow<S> corrupted(TwoSidedWindow<S> wnd) {
  wnd.set(0, 0, wnd.at(0, 0) + ScalarTraits<S>::one());
  return wnd;
}

struct Check {
  std::string name;
  std::vector<Case> cases;
  CaseFn run;
};

std::vector<Case> grid(int p_lo, int p_hi, int n_lo, int n_hi, const std::vector<std::uint64_t>& seeds) {
  std::vector<Case> out;
  for (int p = p_lo; p <= p_hi; ++p)
    for (int n = n_lo; n <= n_hi; ++n)
      for (auto s : seeds) out.push_back({p, n, s});
  return out;
}

std::vector<std::uint64_t> seed_list(const IdentitySuiteOptions& o, int count) {
  if (o.single_seed) return {*o.single_seed};
  std::vector<std::uint64_t> s;
  for (int i = 0; i < count; ++i) s.push_back(static_cast<std::uint64_t>(i));
  return s;
}

std::vector<Check> build_checks(const IdentitySuiteOptions& o) {
  const std::uint64_t base = o.base_seed;
  auto injected = [&](const std::string& name) { return o.inject && *o.inject == name; };
  std::vector<Check> checks;

  {
    const std::string name = "polynomial.derivative";
    const bool inj = injected(name);
    checks.push_back({name, grid(1, o.p_max, 1, o.n_max, seed_list(o, o.seeds_polynomial)),
                      [=](const Case& c) -> std::string {
                        const auto b = random_matrix<E>(base, name, c);
                        auto fam = char_poly_family(b);
                        if (inj) fam.q = char_poly_family(corrupted(b)).q;
                        const auto r = derivative_identity_residual(fam);
                        return r.is_zero() ? "" : "nonzero residual of degree " + std::to_string(r.degree());
                      }});
  }
  {
    const std::string name = "polynomial.row_expansion";
    const bool inj = injected(name);
    checks.push_back({name, grid(1, o.p_max, 1, o.n_max, seed_list(o, o.seeds_polynomial)),
                      [=](const Case& c) -> std::string {
                        const auto b = random_matrix<E>(base, name, c);
                        const auto fam = char_poly_family(b);
                        const auto other = inj ? corrupted(b) : b;
                        for (int j = 1; j <= c.n; ++j)
                          if (!row_expansion_residual(other, fam, j).is_zero())
                            return "nonzero residual at row " + std::to_string(j);
                        return "";
                      }});
  }
  {
    const std::string name = "polynomial.resolvent";
    const bool inj = injected(name);
    const std::uint32_t lane = check_lane(name);
    checks.push_back({name, grid(1, o.p_max, 1, o.n_max, seed_list(o, o.seeds_resolvent)),
                      [=](const Case& c) -> std::string {
                        const auto b = random_matrix<Complex>(base, name, c);
                        Rng rng(base, {case_trial(c.p, c.n, c.seed), Role::identity}, lane + 100);
                        const double radius = 2.0 * (kEntryBound + 1) * (c.p + 2) * (1.0 + rng.uniform());
                        const Complex z = std::polar(radius, 2.0 * std::numbers::pi * rng.uniform());
                        const auto fam = char_poly_family(b);
                        const auto other = inj ? corrupted(b) : b;
                        auto compare = [&](int i, int j) -> std::string {
                          const Complex a = resolvent_entry_poly(fam, z, i, j);
                          const Complex d = resolvent_entry_dense_oracle(other, z, i, j);
                          const double scale = std::max(std::abs(a), std::abs(d));
                          if (std::abs(a - d) <= kResolventTolerance * scale) return "";
                          return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") relative error " + format_double(std::abs(a - d) / scale);
                        };
                        for (int i = 1; i <= c.n; ++i) {
                          if (auto m = compare(i, i); !m.empty()) return m;
                          if (auto m = compare(1, i); !m.empty()) return m;
                        }
                        return "";
                      }});
  }
  {
    const std::string name = "hermite_pade.contact";
    const bool inj = injected(name);
    checks.push_back({name, grid(1, o.p_max, 1, o.n_max, seed_list(o, o.seeds_contact)),
                      [=](const Case& c) -> std::string {
                        const int order = c.n + contact_index(c.n, 1, c.p);
                        const auto seqs = random_sequences<E>(base, name, c, weyl_window(c.p, order));
                        const auto w = weyl_series(seqs, order);
                        const auto pair = hermite_pade_pair(inj ? corrupted(seqs) : seqs, c.n);
                        const auto ok = contact_order_check(pair, w);
                        for (std::size_t j = 0; j < ok.size(); ++j)
                          if (!ok[j]) return "contact order not reached for j = " + std::to_string(j + 1);
                        return "";
                      }});
  }
  auto weyl_pair = [=](const std::string& name, const Case& c, bool inj) {
    const auto seqs = random_sequences<E>(base, name, c, weyl_window(c.p, kWeylOrder) + 1);
    auto w = weyl_series(seqs, kWeylOrder);
    auto w1 = weyl_series(seqs.shifted(1), kWeylOrder);
    std::vector<E> a1;
    for (int k = 0; k <= c.p; ++k) a1.push_back(seqs.at(k, 1));
    if (inj) a1[0] += E(1L);
    return std::make_tuple(std::move(w), std::move(w1), std::move(a1));
  };
  {
    const std::string name = "weyl.shift_relations";
    const bool inj = injected(name);
    checks.push_back({name, grid(1, o.p_max, 0, 0, seed_list(o, o.seeds_weyl)),
                      [=](const Case& c) -> std::string {
                        const auto [w, w1, a1] = weyl_pair(name, c, inj);
                        const auto res = shift_relation_residuals(w, w1, std::span<const E>(a1));
                        for (std::size_t j = 0; j < res.size(); ++j)
                          if (!res[j].is_zero()) return "relation " + std::to_string(j + 1) + " fails";
                        return "";
                      }});
  }
  {
    const std::string name = "weyl.product_expansion";
    const bool inj = injected(name);
    checks.push_back({name, grid(1, o.p_max, 0, 0, seed_list(o, o.seeds_weyl)),
                      [=](const Case& c) -> std::string {
                        const auto [w, w1, a1] = weyl_pair(name, c, inj);
                        for (const auto& r : index_vectors_up_to(c.p, 3)) {
                          const auto res = product_expansion_residual(w, w1, std::span<const E>(a1),
                                                                      std::span<const int>(r), kWeylOrder);
                          if (!res.is_zero()) {
                            std::string key;
                            for (int v : r) key += (key.empty() ? "" : ",") + std::to_string(v);
                            return "nonzero residual for r = (" + key + ")";
                          }
                        }
                        return "";
                      }});
  }
  {
    const std::string name = "two_sided.central_coefficient";
    const bool inj = injected(name);
    checks.push_back({name, grid(1, o.p_max, 0, 0, seed_list(o, o.seeds_central)),
                      [=](const Case& c) -> std::string {
                        const int half = std::max(central_check_half_width(c.p, kCentralSite, kCentralPower),
                                                  central_check_half_width(c.p, -kCentralSite, kCentralPower));
                        const auto wnd = random_window<E>(base, name, c, half);
                        const auto other = inj ? corrupted(wnd) : wnd;
                        for (int j = -kCentralSite; j <= kCentralSite; ++j) {
                          const auto w = w_series(wnd, j, kCentralPower);
                          const auto entries = central_power_entries(other, j, kCentralPower);
                          for (int s = 0; s <= kCentralPower; ++s)
                            if (w[s + 1] != entries[idx(s)])
                              return "site " + std::to_string(j) + ", power " + std::to_string(s);
                        }
                        return "";
                      }});
  }
  {
    const std::string name = "two_sided.vanishing";
    if (injected(name)) throw ConfigError("injection is not available for " + name);
    const int p_hi = std::min(o.p_max, kVanishingP);
    const int n_hi = std::min(o.n_max, kVanishingN);
    checks.push_back({name, grid(1, p_hi, 1, n_hi, seed_list(o, o.seeds_vanishing)),
                      [=](const Case& c) -> std::string {
                        for (Parity parity : {Parity::odd, Parity::even}) {
                          const int half = vanishing_half_width(c.p, c.n, parity);
                          const auto wnd = random_window<E>(base, name, c, half);
                          const auto rep = vanishing_order_suite(wnd, c.n, parity);
                          for (const auto& chk : rep.checks)
                            if (!chk.informational && !chk.passed)
                              return std::string(parity == Parity::odd ? "odd" : "even") + " " +
                                     chk.name + " at site " + std::to_string(chk.site) +
                                     ": coefficient " + std::to_string(chk.first_nonzero) +
                                     " nonzero, required " + std::to_string(chk.required);
                        }
                        return "";
                      }});
  }
  {
    const std::string name = "two_sided.w0_expansion";
    const bool inj = injected(name);
    checks.push_back({name, grid(1, o.p_max, 0, 0, seed_list(o, o.seeds_w0)),
                      [=](const Case& c) -> std::string {
                        const int half = w_series_half_width(c.p, 0, kW0MaxR);
                        const auto wnd = random_window<E>(base, name, c, half);
                        const auto other = inj ? corrupted(wnd) : wnd;
                        for (int r = 0; r <= kW0MaxR; ++r) {
                          if (!(w0_multinomial_expansion(other, r, r) == w_series(wnd, 0, r)))
                            return "mismatch at R = " + std::to_string(r);
                        }
                        return "";
                      }});
  }

  if (o.inject) check_lane(*o.inject);
  if (!o.checks.empty()) {
    for (const auto& n : o.checks) check_lane(n);
    std::erase_if(checks, [&](const Check& c) {
      return std::find(o.checks.begin(), o.checks.end(), c.name) == o.checks.end();
    });
  }
  return checks;
}

}  // namespace

std::vector<std::vector<long>> identity_entries(std::uint64_t base_seed, const std::string& check,
                                                int p, int n, std::uint64_t seed,
                                                const std::vector<int>& lengths) {
  const std::uint32_t lane = check_lane(check);
  Rng rng(base_seed, {case_trial(p, n, seed), Role::identity}, lane);
  std::vector<std::vector<long>> out(lengths.size());
  for (std::size_t k = 0; k < lengths.size(); ++k)
    for (int i = 0; i < lengths[k]; ++i)
      out[k].push_back(static_cast<long>(rng.next() % (2 * kEntryBound + 1)) - kEntryBound);
  return out;
}

IdentitySuiteResult run_identity_checks(const IdentitySuiteOptions& opts) {
  IdentitySuiteResult result;
  for (const auto& check : build_checks(opts)) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> outcome(check.cases.size());
    parallel_for(static_cast<int>(check.cases.size()), opts.threads,
                 [&](int i) { outcome[idx(i)] = check.run(check.cases[idx(i)]); });
    IdentityCheckSummary summary{check.name, static_cast<long>(check.cases.size()), 0, 0.0};
    for (std::size_t i = 0; i < outcome.size(); ++i) {
      if (outcome[i].empty()) continue;
      ++summary.failures;
      const auto& c = check.cases[i];
      result.failures.push_back({check.name, c.seed, c.p, c.n, outcome[i]});
    }
    summary.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.checks.push_back(summary);
  }
  return result;
}

ExperimentReport identity_report(const IdentitySuiteResult& result, const IdentitySuiteOptions& opts,
                                 std::uint64_t config_hash, bool timing) {
  ExperimentReport r;
  r.name = "identities";
  r.seed = opts.base_seed;
  r.config_hash = config_hash;
  r.scalar_path = "exact";
  double seconds = 0.0;
  for (const auto& c : result.checks) {
    ReportRow row{"identities", c.check, Complex(static_cast<double>(c.failures), 0.0), 0.0,
                  Complex(0.0, 0.0), 0.0, 0.0, c.failures == 0 ? Verdict::pass : Verdict::fail};
    r.rows.push_back(row);
    r.metadata["cases." + c.check] = std::to_string(c.cases);
    seconds += c.seconds;
  }
  if (opts.inject) r.metadata["inject"] = *opts.inject;
  for (std::size_t i = 0; i < result.failures.size(); ++i) {
    const auto& f = result.failures[i];
    char label[32];
    std::snprintf(label, sizeof label, "failure.%06zu", i);
    r.metadata[label] = "check=" + f.check + " seed=" + std::to_string(f.seed) +
                        " p=" + std::to_string(f.p) + " n=" + std::to_string(f.n) + " : " + f.detail;
  }
  if (timing) r.runtime_seconds = seconds;
  return r;
}

}  // namespace bhm
