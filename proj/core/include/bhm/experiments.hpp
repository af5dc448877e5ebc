#pragma once

#include <vector>

#include "bhm/combinatorics.hpp"
#include "bhm/config.hpp"
#include "bhm/report.hpp"

namespace bhm {

struct RunOptions {
  int threads = 1;
  /// Rational arithmetic for the moment paths; pointwise and g/invariance stay in floating point.
  bool exact = false;
  /// Record wall-clock runtime in the report (makes reports differ between runs).
  bool timing = false;
};

/// Monte Carlo mean with standard error. n = 0 marks a limit (RHS) estimate.
struct MomentEstimate {
  int n = 0;
  int s = 0;
  Complex mean;
  double se = 0.0;
};

/// Sample mean and standard error of the mean; identical samples give SE = 0 and the
/// sample itself as the mean.
MomentEstimate summarize(const std::vector<Complex>& samples);

/// (1/n) E tr(H_n^s) for every configured n and 0 <= s <= s_max, ordered by n then s.
std::vector<MomentEstimate> run_lhs_moments(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// E [W]_{s+1} for 0 <= s <= s_max.
std::vector<MomentEstimate> run_rhs_moments(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Both moment sequences as informational rows.
ExperimentReport run_moments(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// LHS at the largest n against the RHS for each s, plus the pointwise row
/// (1/n) Q_n'(z)/Q_n(z) against W(z) at z_eval.
ExperimentReport compare_theorem_main(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Every r in Z_{>=0}^p with |r| <= max_total.
std::vector<IndexVector> default_r_list(int p, int max_total);

/// Checks the eta recursion for each r and the E W(z) expansion at z_eval.
ExperimentReport run_g_suite(const ExperimentConfig& cfg, const std::vector<IndexVector>& r_list,
                             const RunOptions& opts = {});

/// Compares E f(Phi(z)) and E f(lambda_z(t, X)) for all monomials of total degree <= degree.
ExperimentReport run_invariance(const ExperimentConfig& cfg, int degree, const RunOptions& opts = {});

/// Smallest N with (rho/|z|)^N < 1e-12 for the norm bound rho; throws ConfigError if |z| <= rho.
int evaluation_order(const ExperimentConfig& cfg);

/// Bound on the error of summing a series with coefficients |c_k| <= rho^{k-1}, k >= 1,
/// at z through z^{-order}.
double series_tail_bound(double rho, double abs_z, int order);

/// (1/n) Q_n'(z)/Q_n(z) for the leading n x n truncation, by a rescaled recurrence.
Complex normalized_log_derivative(const DiagonalSequences<Complex>& seqs, int n, Complex z);

}  // namespace bhm
