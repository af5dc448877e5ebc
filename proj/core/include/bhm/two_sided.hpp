#pragma once

#include <string>
#include <vector>

#include "bhm/banded.hpp"
#include "bhm/laurent.hpp"
#include "bhm/weyl.hpp"

namespace bhm {

/// Diagonal values a_n^{(k)}, 0 <= k <= p, at sites -L <= n <= L of the
/// bi-infinite operator M e_n = e_{n-1} + sum_k a_n^{(k)} e_{n+k}.
template <class S>
class TwoSidedWindow {
 public:
  TwoSidedWindow(int p, int half_width);
  /// values[k][n + L] = a_n^{(k)}.
  TwoSidedWindow(int p, int half_width, std::vector<std::vector<S>> values);

  int bands() const { return p_; }
  int half_width() const { return half_; }
  bool contains(int n) const { return n >= -half_ && n <= half_; }
  /// a_n^{(k)}; throws InsufficientWindow when |n| > L.
  const S& at(int k, int n) const;
  void set(int k, int n, S value);
  /// The window of a'_n = a_{n+shift}, with half-width L - |shift|.
  TwoSidedWindow translated(int shift) const;

 private:
  int p_;
  int half_;
  std::vector<std::vector<S>> values_;
};

enum class Side { plus, minus };

/// Available sequence length of H_r^{+} (L - r) or H_r^{-} (r + L - p).
int one_sided_length(int p, int half_width, int r, Side side);

/// Sequences of H_r^{+} (a_{n+r}^{(k)}) or H_r^{-} (a_{r-n-k}^{(k)}), n >= 1.
template <class S>
DiagonalSequences<S> extract_one_sided(const TwoSidedWindow<S>& wnd, int r, Side side);

/// (phi_{r,1}^{+-}, ..., phi_{r,p}^{+-}) to order N.
template <class S>
WeylSystem<S> phi_pm_series(const TwoSidedWindow<S>& wnd, int r, Side side, int order);

/// Half-width needed by w_series at site j to order N.
int w_series_half_width(int p, int j, int order);

/// d_j(z) = a_j^0 + sum_{l=1}^p sum_{k=0}^l a_{j-k}^l phi_{j,l-k}^+ phi_{j,k}^-, to order N.
template <class S>
Laurent<S> d_series(const TwoSidedWindow<S>& wnd, int j, int order);

/// w_j = 1/(z - d_j) to order N+1.
template <class S>
Laurent<S> w_series(const TwoSidedWindow<S>& wnd, int j, int order);

/// M_T^s(j, j), s = 0..s_max, with M_T the truncation of M to the window sites.
template <class S>
std::vector<S> central_power_entries(const TwoSidedWindow<S>& wnd, int j, int s_max);

/// Half-width required by central_coefficient_check.
int central_check_half_width(int p, int j, int s_max);

/// Per s in 0..s_max: [w_j]_{s+1} == M^s(j, j).
template <class S>
std::vector<bool> central_coefficient_check(const TwoSidedWindow<S>& wnd, int j, int s_max);

/// The finite matrix with entries m_{i,j}, lo <= i, j <= hi (site lo is matrix index 1).
template <class S>
BandedHessenberg<S> central_truncation(const TwoSidedWindow<S>& wnd, int lo, int hi);

enum class Parity { odd, even };

struct VanishingCheck {
  std::string name;
  int site = 0;
  int index = 0;          // t = l - k for the phi checks, 0 for the main check
  int required = 0;       // coefficients 1..required must vanish
  int first_nonzero = -1; // within 0..required+1; -1 when none
  bool informational = false;
  bool passed = false;
};

struct VanishingReport {
  int n = 0;
  Parity parity = Parity::odd;
  std::vector<VanishingCheck> checks;

  /// True when every non-informational check passed.
  bool passed() const;
};

/// Half-width needed by vanishing_order_suite.
int vanishing_half_width(int p, int n, Parity parity);

/// Order-of-vanishing checks for the central truncation M_{2n+1} (odd) or M_{2n} (even).
template <class S>
VanishingReport vanishing_order_suite(const TwoSidedWindow<S>& wnd, int n, Parity parity);

/// The multinomial expansion of w_0 through r <= R, as a series of order N+1.
template <class S>
Laurent<S> w0_multinomial_expansion(const TwoSidedWindow<S>& wnd, int max_r, int order);

extern template class TwoSidedWindow<Complex>;
extern template class TwoSidedWindow<ExactComplex>;

}  // namespace bhm
