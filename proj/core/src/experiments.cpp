#include "bhm/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <span>
#include <string>

#include "bhm/banded.hpp"
#include "bhm/errors.hpp"
#include "bhm/laurent.hpp"
#include "parallel.hpp"
#include "bhm/sampling.hpp"
#include "bhm/two_sided.hpp"
#include "bhm/weyl.hpp"

namespace bhm {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr double kSeriesTolerance = 1e-12;
constexpr double kRoundoff = 1e-11;
// Largest truncation order tried for the g-suite series before giving up.
constexpr int kSeriesCap = 60;
// Upper limit on enumerated compositions per truncated sum.
constexpr long kTermBudget = 4'000'000;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

ExperimentReport make_report(const std::string& name, const ExperimentConfig& cfg,
                             const RunOptions& opts) {
  ExperimentReport r;
  r.name = name;
  r.seed = cfg.ensemble.seed;
  r.config_hash = config_hash(cfg);
  r.scalar_path = opts.exact ? "exact" : "float";
  return r;
}

void finish(ExperimentReport& r, const RunOptions& opts, const Stopwatch& clock) {
  if (opts.timing) r.runtime_seconds = clock.seconds();
}

std::string complex_text(Complex z) { return format_double(z.real()) + "," + format_double(z.imag()); }

std::string vector_text(const IndexVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Distinct streams per matrix size: the high word carries n.
std::uint64_t lhs_trial(int n, int t) {
  return (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(t);
}

template <class S>
std::vector<std::vector<Complex>> lhs_moment_samples(const ExperimentConfig& cfg, int n,
                                                     const RunOptions& opts) {
  std::vector<std::vector<Complex>> out(idx(cfg.trials_lhs));
  parallel_for(cfg.trials_lhs, opts.threads, [&](int t) {
    const auto seqs = sample_one_sided<S>(cfg.ensemble, n, {lhs_trial(n, t), Role::lhs_matrix});
    const auto tr = trace_powers(BandedHessenberg<S>::leading(seqs, n), cfg.s_max);
    auto& row = out[idx(t)];
    row.reserve(tr.size());
    for (const auto& v : tr) row.push_back(ScalarTraits<S>::to_complex(v) / static_cast<double>(n));
  });
  return out;
}

template <class S>
std::vector<std::vector<Complex>> rhs_moment_samples(const ExperimentConfig& cfg,
                                                     const RunOptions& opts) {
  const int order = cfg.laurent_order;
  const int half = w_series_half_width(cfg.ensemble.p, 0, order);
  std::vector<std::vector<Complex>> out(idx(cfg.trials_rhs));
  parallel_for(cfg.trials_rhs, opts.threads, [&](int t) {
    const auto wnd = build_theorem_collections<S>(cfg.ensemble, half, static_cast<std::uint64_t>(t));
    const auto w = w_series(wnd, 0, order);
    auto& row = out[idx(t)];
    for (int s = 0; s <= cfg.s_max; ++s) row.push_back(ScalarTraits<S>::to_complex(w.at(s + 1)));
  });
  return out;
}

std::vector<MomentEstimate> estimates(const std::vector<std::vector<Complex>>& samples, int n,
                                      int s_max) {
  std::vector<MomentEstimate> out;
  std::vector<Complex> column(samples.size());
  for (int s = 0; s <= s_max; ++s) {
    for (std::size_t t = 0; t < samples.size(); ++t) column[t] = samples[t][idx(s)];
    auto e = summarize(column);
    e.n = n;
    e.s = s;
    out.push_back(e);
  }
  return out;
}

std::vector<MomentEstimate> lhs_moments(const ExperimentConfig& cfg, const RunOptions& opts) {
  std::vector<MomentEstimate> out;
  for (int n : cfg.n_values) {
    const auto samples = opts.exact ? lhs_moment_samples<ExactComplex>(cfg, n, opts)
                                    : lhs_moment_samples<Complex>(cfg, n, opts);
    const auto e = estimates(samples, n, cfg.s_max);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

std::vector<MomentEstimate> rhs_moments(const ExperimentConfig& cfg, const RunOptions& opts) {
  const auto samples = opts.exact ? rhs_moment_samples<ExactComplex>(cfg, opts)
                                  : rhs_moment_samples<Complex>(cfg, opts);
  return estimates(samples, 0, cfg.s_max);
}

/// phi_1(z)..phi_p(z) of the one-sided operator drawn from `stream`.
std::vector<Complex> weyl_vector(const EnsembleSpec& e, int order, Complex z, StreamId stream) {
  const auto seqs = sample_one_sided<Complex>(e, weyl_window(e.p, order), stream);
  const auto w = weyl_series(seqs, order);
  std::vector<Complex> out(idx(e.p));
  for (int j = 1; j <= e.p; ++j) out[idx(j - 1)] = evaluate(w(j), z);
  return out;
}

std::vector<std::vector<Complex>> weyl_vectors(const ExperimentConfig& cfg, int trials, int order,
                                               Role role, const RunOptions& opts) {
  const Complex z = cfg.evaluation_point();
  std::vector<std::vector<Complex>> out(idx(trials));
  parallel_for(trials, opts.threads, [&](int t) {
    out[idx(t)] = weyl_vector(cfg.ensemble, order, z, {static_cast<std::uint64_t>(t), role});
  });
  return out;
}

Complex monomial(const std::vector<Complex>& x, const IndexVector& d) {
  Complex v(1.0, 0.0);
  for (std::size_t j = 0; j < d.size(); ++j)
    for (int e = 0; e < d[j]; ++e) v *= x[j];
  return v;
}

int total(const IndexVector& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

/// Norm-based a-priori bounds at z: F[j] >= |phi_j(z)| with F[0] = 1.
std::vector<double> weyl_bounds(double rho, double abs_z, int p) {
  std::vector<double> f(idx(p + 1), 1.0);
  for (int j = 1; j <= p; ++j)
    f[idx(j)] = std::pow(rho, j - 1) / std::pow(abs_z, j) / (1.0 - rho / abs_z);
  return f;
}

/// Exact moments m_k^{(l)} for k <= kmax.
class MomentTable {
 public:
  MomentTable(const EnsembleSpec& e, int kmax) : m_(idx(e.p + 1)) {
    for (int l = 0; l <= e.p; ++l)
      for (int k = 0; k <= kmax; ++k) m_[idx(l)].push_back(exact_moment(e.mus[idx(l)], k));
  }
  const ExactComplex& operator()(int l, int k) const { return m_[idx(l)].at(idx(k)); }
  /// Every moment of order >= 1 vanishes (the law is the point mass at 0).
  bool null_law(int l) const {
    for (std::size_t k = 1; k < m_[idx(l)].size(); ++k)
      if (!m_[idx(l)][k].is_zero()) return false;
    return true;
  }

 private:
  std::vector<std::vector<ExactComplex>> m_;
};

struct TruncatedSum {
  std::map<IndexVector, Complex> terms;
  int order = 0;
  double tail = 0.0;
  bool converged = true;
};

/// Chooses the smallest order in [0, cap] whose tail is below target.
template <class TailFn>
std::pair<int, bool> choose_order(TailFn&& tail, double target, int cap) {
  for (int n = 0; n <= cap; ++n)
    if (tail(n) <= target) return {n, true};
  return {cap, false};
}

/// Enumerates compositions of `n` over the active slots only, expanded to `width` slots.
template <class Fn>
void for_each_active_composition(int n, const std::vector<int>& active, int width, Fn&& fn) {
  std::vector<int> full(idx(width), 0);
  if (active.empty()) {
    if (n == 0) fn(std::span<const int>(full));
    return;
  }
  for_each_composition(n, static_cast<int>(active.size()), [&](std::span<const int> parts) {
    for (std::size_t i = 0; i < active.size(); ++i) full[idx(active[i])] = parts[i];
    fn(std::span<const int>(full));
  });
}

/// Coefficients c_eta with g_r = sum_eta c_eta g_eta, truncated at the chosen n_max.
TruncatedSum eta_recursion_sum(const ExperimentConfig& cfg, const IndexVector& r, double target) {
  const auto& e = cfg.ensemble;
  const int p = e.p;
  const Complex z = cfg.evaluation_point();
  const double az = std::abs(z);
  const auto f = weyl_bounds(cfg.norm_bound(), az, p);
  const int rt = total(r);

  double q = 0.0;
  for (int l = 0; l <= p; ++l) q += e.mus[idx(l)].bound() * f[idx(l)];
  q /= az;
  double pref = std::pow(az, -rt);
  for (int j = 2; j <= p; ++j) pref *= std::pow(f[idx(j - 1)], r[idx(j - 1)]);
  auto tail = [&](int n_max) {
    if (rt == 0) return 0.0;
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    // sum_{n > n_max} C(n + rt - 1, rt - 1) q^n
    double b = 1.0;  // C(n + rt - 1, rt - 1) at n = 0
    double qn = 1.0;
    double sum = 0.0;
    for (int n = 0; n < 100000; ++n) {
      if (n > n_max) {
        const double term = b * qn;
        sum += term;
        if (term < 1e-30 * sum) break;
      }
      b *= static_cast<double>(n + rt) / static_cast<double>(n + 1);
      qn *= q;
    }
    return pref * sum;
  };

  const MomentTable m(e, kSeriesCap);
  std::vector<int> active;
  for (int l = 0; l <= p; ++l)
    if (!m.null_law(l)) active.push_back(l);

  TruncatedSum out;
  auto [n_max, ok] = choose_order(tail, target, kSeriesCap);
  out.order = n_max;
  out.converged = ok;
  out.tail = tail(n_max);

  long budget = 0;
  for (int n = 0; n <= n_max; ++n) {
    const BigInt binom = binomial_with_convention(n + rt - 1, rt - 1);
    if (binom == 0) continue;
    const Complex zpow = std::pow(z, -(n + rt));
    for_each_active_composition(n, active, p + 1, [&](std::span<const int> k) {
      if (++budget > kTermBudget) throw TruncationExceeded("eta recursion term budget exhausted");
      ExactComplex c(Rational(binom * multinomial(n, k)));
      for (int l = 0; l <= p; ++l) c = c * m(l, k[idx(l)]);
      if (c.is_zero()) return;
      out.terms[eta_map(r, k)] += c.to_complex() * zpow;
    });
  }
  return out;
}

/// Coefficients c_{alpha,beta} with E W = sum c g_alpha g_beta; the key is alpha followed by beta.
TruncatedSum ew_sum(const ExperimentConfig& cfg, double target) {
  const auto& e = cfg.ensemble;
  const int p = e.p;
  const Complex z = cfg.evaluation_point();
  const double az = std::abs(z);
  const auto f = weyl_bounds(cfg.norm_bound(), az, p);
  const int width = triangle_size(p);

  double g = 0.0;
  for (int l = 0; l <= p; ++l)
    for (int s = 0; s <= l; ++s) g += e.mus[idx(l)].bound() * f[idx(l - s)] * f[idx(s)];
  const double ratio = g / az;
  auto tail = [&](int r_max) {
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(ratio, r_max + 1) / az / (1.0 - ratio);
  };

  const MomentTable m(e, kSeriesCap);
  std::vector<int> active;  // 0-based slots
  for (int l = 0; l <= p; ++l)
    for (int s = 0; s <= l; ++s)
      if (!m.null_law(l)) active.push_back(flat_index(s, l) - 1);

  TruncatedSum out;
  auto [r_max, ok] = choose_order(tail, target, kSeriesCap);
  out.order = r_max;
  out.converged = ok;
  out.tail = tail(r_max);

  long budget = 0;
  for (int r = 0; r <= r_max; ++r) {
    const Complex zpow = std::pow(z, -(r + 1));
    for_each_active_composition(r, active, width, [&](std::span<const int> k) {
      if (++budget > kTermBudget) throw TruncationExceeded("W expansion term budget exhausted");
      ExactComplex c(Rational(multinomial(r, k)));
      for (int l = 0; l <= p; ++l)
        for (int s = 0; s <= l; ++s) c = c * m(l, k[idx(flat_index(s, l) - 1)]);
      if (c.is_zero()) return;
      IndexVector key = alpha_vector(k, p);
      const auto beta = beta_vector(k, p);
      key.insert(key.end(), beta.begin(), beta.end());
      out.terms[key] += c.to_complex() * zpow;
    });
  }
  return out;
}

/// Target for series truncation: a tenth of the statistical noise, or near machine
/// precision when the estimate is deterministic.
double truncation_target(const MomentEstimate& est) {
  if (est.se > 0.0) return 0.1 * est.se;
  return 1e-13 * std::max(1.0, std::abs(est.mean));
}

double coefficient_mass(const TruncatedSum& sum) {
  double m = 0.0;
  for (const auto& [key, c] : sum.terms) m += std::abs(c) * std::max(1, total(key));
  return m;
}

}  // namespace

MomentEstimate summarize(const std::vector<Complex>& samples) {
  if (samples.empty()) throw PreconditionViolation("summarize: no samples");
  MomentEstimate e;
  if (std::all_of(samples.begin(), samples.end(), [&](Complex x) { return x == samples.front(); })) {
    e.mean = samples.front();
    return e;
  }
  const double count = static_cast<double>(samples.size());
  Complex sum;
  for (Complex x : samples) sum += x;
  e.mean = sum / count;
  double ss = 0.0;
  for (Complex x : samples) ss += std::norm(x - e.mean);
  e.se = std::sqrt(ss / (count - 1.0) / count);
  return e;
}

int evaluation_order(const ExperimentConfig& cfg) {
  const double rho = cfg.norm_bound();
  const double az = std::abs(cfg.evaluation_point());
  if (az <= rho) throw ConfigError("z_eval must exceed the norm bound (C+1)(p+2)");
  const double ratio = rho / az;
  int n = 1;
  while (std::pow(ratio, n) >= kSeriesTolerance) ++n;
  return n;
}

double series_tail_bound(double rho, double abs_z, int order) {
  return std::pow(rho / abs_z, order) / (abs_z - rho);
}

Complex normalized_log_derivative(const DiagonalSequences<Complex>& seqs, int n, Complex z) {
  const int p = seqs.bands();
  std::vector<Complex> q(idx(n + 1)), dq(idx(n + 1));
  q[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    const Complex lin = z - seqs.at(0, m);
    Complex v = lin * q[idx(m - 1)];
    Complex dv = q[idx(m - 1)] + lin * dq[idx(m - 1)];
    for (int k = 1; k <= p && m - 1 - k >= 0; ++k) {
      const Complex b = seqs.at(k, m - k);
      v -= b * q[idx(m - 1 - k)];
      dv -= b * dq[idx(m - 1 - k)];
    }
    q[idx(m)] = v;
    dq[idx(m)] = dv;
    const double mag = std::abs(v);
    if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
      for (int i = std::max(0, m - p); i <= m; ++i) {
        q[idx(i)] /= mag;
        dq[idx(i)] /= mag;
      }
    }
  }
  if (q[idx(n)] == Complex(0.0, 0.0)) throw EigenvalueHit("normalized_log_derivative: Q_n(z) = 0");
  return dq[idx(n)] / q[idx(n)] / static_cast<double>(n);
}

std::vector<MomentEstimate> run_lhs_moments(const ExperimentConfig& cfg, const RunOptions& opts) {
  cfg.validate(false);
  return lhs_moments(cfg, opts);
}

std::vector<MomentEstimate> run_rhs_moments(const ExperimentConfig& cfg, const RunOptions& opts) {
  cfg.validate(false);
  return rhs_moments(cfg, opts);
}

ExperimentReport run_moments(const ExperimentConfig& cfg, const RunOptions& opts) {
  const Stopwatch clock;
  cfg.validate(false);
  auto report = make_report("moments", cfg, opts);
  for (const auto& e : lhs_moments(cfg, opts))
    report.rows.push_back({"moments_lhs", "n=" + std::to_string(e.n) + ",s=" + std::to_string(e.s),
                           e.mean, e.se, {}, 0.0, 0.0, Verdict::info});
  for (const auto& e : rhs_moments(cfg, opts))
    report.rows.push_back({"moments_rhs", "s=" + std::to_string(e.s), {}, 0.0, e.mean, e.se, 0.0,
                           Verdict::info});
  finish(report, opts, clock);
  return report;
}

ExperimentReport compare_theorem_main(const ExperimentConfig& cfg, const RunOptions& opts) {
  const Stopwatch clock;
  cfg.validate(true);
  auto report = make_report("compare", cfg, opts);
  const int n_max = *std::max_element(cfg.n_values.begin(), cfg.n_values.end());

  const auto lhs = lhs_moments(cfg, opts);
  const auto rhs = rhs_moments(cfg, opts);
  for (const auto& e : lhs) {
    if (e.n == n_max) continue;
    report.rows.push_back({"moments_lhs", "n=" + std::to_string(e.n) + ",s=" + std::to_string(e.s),
                           e.mean, e.se, {}, 0.0, 0.0, Verdict::info});
  }
  for (const auto& r : rhs) {
    const auto it = std::find_if(lhs.begin(), lhs.end(),
                                 [&](const MomentEstimate& e) { return e.n == n_max && e.s == r.s; });
    ReportRow row{"moments", "s=" + std::to_string(r.s), it->mean, it->se, r.mean, r.se, 0.0,
                  Verdict::info};
    judge_row(row, cfg.tolerance_sigmas);
    report.rows.push_back(row);
  }

  // Pointwise form at z_eval.
  const Complex z = cfg.evaluation_point();
  const int order = evaluation_order(cfg);
  const double tail = series_tail_bound(cfg.norm_bound(), std::abs(z), order);
  std::vector<Complex> lhs_pt(idx(cfg.trials_lhs)), rhs_pt(idx(cfg.trials_rhs));
  parallel_for(cfg.trials_lhs, opts.threads, [&](int t) {
    const auto seqs =
        sample_one_sided<Complex>(cfg.ensemble, n_max, {lhs_trial(n_max, t), Role::lhs_matrix});
    lhs_pt[idx(t)] = normalized_log_derivative(seqs, n_max, z);
  });
  const int half = w_series_half_width(cfg.ensemble.p, 0, order - 1);
  parallel_for(cfg.trials_rhs, opts.threads, [&](int t) {
    const auto wnd =
        build_theorem_collections<Complex>(cfg.ensemble, half, static_cast<std::uint64_t>(t));
    rhs_pt[idx(t)] = evaluate(w_series(wnd, 0, order - 1), z);
  });
  const auto l = summarize(lhs_pt);
  const auto r = summarize(rhs_pt);
  ReportRow row{"pointwise", "z=" + complex_text(z), l.mean, l.se, r.mean, r.se,
                tail + kRoundoff * (1.0 + std::abs(r.mean)), Verdict::info};
  judge_row(row, cfg.tolerance_sigmas);
  report.rows.push_back(row);

  report.metadata["n_max"] = std::to_string(n_max);
  report.metadata["z_eval"] = complex_text(z);
  report.metadata["evaluation_order"] = std::to_string(order);
  finish(report, opts, clock);
  return report;
}

std::vector<IndexVector> default_r_list(int p, int max_total) { return index_vectors_up_to(p, max_total); }

ExperimentReport run_g_suite(const ExperimentConfig& cfg, const std::vector<IndexVector>& r_list,
                             const RunOptions& opts) {
  const Stopwatch clock;
  cfg.validate(true);
  const int p = cfg.ensemble.p;
  auto report = make_report("gsuite", cfg, opts);
  const Complex z = cfg.evaluation_point();
  const int order = evaluation_order(cfg);
  const double tau = series_tail_bound(cfg.norm_bound(), std::abs(z), order);
  report.metadata["z_eval"] = complex_text(z);
  report.metadata["evaluation_order"] = std::to_string(order);

  const auto phi_lhs = weyl_vectors(cfg, cfg.trials_lhs, order, Role::weyl_plus, opts);
  const auto phi_rhs = weyl_vectors(cfg, cfg.trials_rhs, order, Role::weyl_shifted, opts);

  for (const auto& r : r_list) {
    if (static_cast<int>(r.size()) != p)
      throw ConfigError("g-suite: r must have p = " + std::to_string(p) + " entries");
    std::vector<Complex> lhs_v(phi_lhs.size());
    for (std::size_t t = 0; t < phi_lhs.size(); ++t) lhs_v[t] = monomial(phi_lhs[t], r);
    const auto l = summarize(lhs_v);
    const auto sum = eta_recursion_sum(cfg, r, truncation_target(l));
    std::vector<Complex> rhs_v(phi_rhs.size());
    for (std::size_t t = 0; t < phi_rhs.size(); ++t) {
      Complex v;
      for (const auto& [eta, c] : sum.terms) v += c * monomial(phi_rhs[t], eta);
      rhs_v[t] = v;
    }
    const auto rr = summarize(rhs_v);
    const std::string key = "eta:r=" + vector_text(r);
    ReportRow row{"gsuite", key, l.mean, l.se, rr.mean, rr.se, 0.0, Verdict::info};
    row.allowance = sum.tail + tau * (total(r) + coefficient_mass(sum)) +
                    kRoundoff * (1.0 + std::abs(l.mean));
    judge_row(row, cfg.tolerance_sigmas);
    if (!sum.converged && row.verdict == Verdict::fail) row.verdict = Verdict::inconclusive;
    report.rows.push_back(row);
    report.metadata["truncation." + key] =
        "n_max=" + std::to_string(sum.order) + ",tail=" + format_double(sum.tail);
  }

  // E W(z) against the expansion in g_alpha g_beta.
  {
    const int half = w_series_half_width(p, 0, order - 1);
    std::vector<Complex> lhs_v(idx(cfg.trials_lhs));
    parallel_for(cfg.trials_lhs, opts.threads, [&](int t) {
      const auto wnd = sample_window<Complex>(cfg.ensemble, half,
                                              {static_cast<std::uint64_t>(t), Role::window});
      lhs_v[idx(t)] = evaluate(w_series(wnd, 0, order - 1), z);
    });
    const auto l = summarize(lhs_v);
    const auto sum = ew_sum(cfg, truncation_target(l));
    const auto plus = weyl_vectors(cfg, cfg.trials_rhs, order, Role::ew_phi, opts);
    const auto minus = weyl_vectors(cfg, cfg.trials_rhs, order, Role::ew_psi, opts);
    std::vector<Complex> rhs_v(idx(cfg.trials_rhs));
    for (std::size_t t = 0; t < rhs_v.size(); ++t) {
      Complex v;
      for (const auto& [key, c] : sum.terms) {
        const IndexVector a(key.begin(), key.begin() + p);
        const IndexVector b(key.begin() + p, key.end());
        v += c * monomial(plus[t], a) * monomial(minus[t], b);
      }
      rhs_v[t] = v;
    }
    const auto rr = summarize(rhs_v);
    ReportRow row{"gsuite", "ew", l.mean, l.se, rr.mean, rr.se, 0.0, Verdict::info};
    row.allowance = sum.tail + tau * (1.0 + coefficient_mass(sum)) +
                    kRoundoff * (1.0 + std::abs(l.mean));
    judge_row(row, cfg.tolerance_sigmas);
    if (!sum.converged && row.verdict == Verdict::fail) row.verdict = Verdict::inconclusive;
    report.rows.push_back(row);
    report.metadata["truncation.ew"] =
        "r_max=" + std::to_string(sum.order) + ",tail=" + format_double(sum.tail);
  }
  finish(report, opts, clock);
  return report;
}

ExperimentReport run_invariance(const ExperimentConfig& cfg, int degree, const RunOptions& opts) {
  const Stopwatch clock;
  cfg.validate(true);
  if (degree < 0) throw ConfigError("invariance: degree must be >= 0");
  const auto& e = cfg.ensemble;
  const int p = e.p;
  auto report = make_report("invariance", cfg, opts);
  const Complex z = cfg.evaluation_point();
  const int order = evaluation_order(cfg);
  const double tau = series_tail_bound(cfg.norm_bound(), std::abs(z), order);
  report.metadata["z_eval"] = complex_text(z);
  report.metadata["evaluation_order"] = std::to_string(order);
  report.metadata["degree"] = std::to_string(degree);

  const auto phi = weyl_vectors(cfg, cfg.trials_lhs, order, Role::invariance_phi, opts);
  const auto x = weyl_vectors(cfg, cfg.trials_rhs, order, Role::invariance_x, opts);
  std::vector<Sampler> samplers;
  for (const auto& mu : e.mus) samplers.emplace_back(mu);

  std::vector<std::vector<Complex>> lambda(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    Complex d = z;
    for (int k = 0; k <= p; ++k) {
      Rng rng(e.seed, {t, Role::invariance_t}, static_cast<std::uint32_t>(k));
      const Complex tk = samplers[idx(k)].draw(rng);
      d -= k == 0 ? tk : tk * x[t][idx(k - 1)];
    }
    if (std::abs(d) < 1e-9) throw ConfigError("invariance: z - t_0 - sum t_k x_k vanishes; z_eval too small");
    auto& v = lambda[t];
    v.resize(idx(p));
    v[0] = 1.0 / d;
    for (int j = 1; j < p; ++j) v[idx(j)] = x[t][idx(j - 1)] / d;
  }

  for (const auto& d : index_vectors_up_to(p, degree)) {
    std::vector<Complex> lv(phi.size()), rv(lambda.size());
    for (std::size_t t = 0; t < phi.size(); ++t) lv[t] = monomial(phi[t], d);
    for (std::size_t t = 0; t < lambda.size(); ++t) rv[t] = monomial(lambda[t], d);
    const auto l = summarize(lv);
    const auto r = summarize(rv);
    ReportRow row{"invariance", "d=" + vector_text(d), l.mean, l.se, r.mean, r.se, 0.0, Verdict::info};
    row.allowance = 4.0 * total(d) * tau + kRoundoff * (1.0 + std::abs(l.mean));
    judge_row(row, cfg.tolerance_sigmas);
    report.rows.push_back(row);
  }
  finish(report, opts, clock);
  return report;
}

}  // namespace bhm
