#include "bhm/two_sided.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <tuple>

#include "bhm/combinatorics.hpp"
#include "bhm/errors.hpp"
#include "bhm/polynomial.hpp"

namespace bhm {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int floor_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

template <class S>
bool negligible(const S& v, double scale) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)scale;
    return v.is_zero();
  } else {
    return std::abs(v) <= 1e-8 * scale;
  }
}

/// First index k in 0..order with a significant coefficient, or -1.
template <class S>
int first_significant(const Laurent<S>& f, double scale) {
  for (int k = 0; k <= f.order(); ++k)
    if (!negligible(f[k], scale)) return k;
  return -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Window

template <class S>
TwoSidedWindow<S>::TwoSidedWindow(int p, int half_width)
    : p_(p), half_(half_width),
      values_(idx(p + 1), std::vector<S>(idx(2 * half_width + 1), ScalarTraits<S>::zero())) {
  if (p < 0 || half_width < 0) throw PreconditionViolation("TwoSidedWindow: negative size");
}

template <class S>
TwoSidedWindow<S>::TwoSidedWindow(int p, int half_width, std::vector<std::vector<S>> values)
    : p_(p), half_(half_width), values_(std::move(values)) {
  if (p < 0 || half_width < 0) throw PreconditionViolation("TwoSidedWindow: negative size");
  if (values_.size() != idx(p + 1)) throw PreconditionViolation("TwoSidedWindow: need p+1 rows");
  for (const auto& row : values_)
    if (row.size() != idx(2 * half_width + 1))
      throw PreconditionViolation("TwoSidedWindow: rows must have 2L+1 entries");
}

template <class S>
const S& TwoSidedWindow<S>::at(int k, int n) const {
  if (k < 0 || k > p_) throw PreconditionViolation("TwoSidedWindow: diagonal out of range");
  if (!contains(n))
    throw InsufficientWindow("site " + std::to_string(n) + " outside window", std::abs(n), half_);
  return values_[idx(k)][idx(n + half_)];
}

template <class S>
void TwoSidedWindow<S>::set(int k, int n, S value) {
  if (k < 0 || k > p_) throw PreconditionViolation("TwoSidedWindow: diagonal out of range");
  if (!contains(n))
    throw InsufficientWindow("site " + std::to_string(n) + " outside window", std::abs(n), half_);
  values_[idx(k)][idx(n + half_)] = std::move(value);
}

template <class S>
TwoSidedWindow<S> TwoSidedWindow<S>::translated(int shift) const {
  const int half = half_ - std::abs(shift);
  if (half < 0) throw InsufficientWindow("translation exceeds window", std::abs(shift), half_);
  TwoSidedWindow out(p_, half);
  for (int k = 0; k <= p_; ++k)
    for (int n = -half; n <= half; ++n) out.set(k, n, at(k, n + shift));
  return out;
}

// ---------------------------------------------------------------------------
// One-sided restrictions

int one_sided_length(int p, int half_width, int r, Side side) {
  const int len = side == Side::plus ? half_width - r : r + half_width - p;
  return std::max(len, 0);
}

template <class S>
DiagonalSequences<S> extract_one_sided(const TwoSidedWindow<S>& wnd, int r, Side side) {
  const int p = wnd.bands();
  if (!wnd.contains(r)) throw InsufficientWindow("extract_one_sided: r outside window", std::abs(r), wnd.half_width());
  const int len = one_sided_length(p, wnd.half_width(), r, side);
  std::vector<std::vector<S>> d(idx(p + 1));
  for (int k = 0; k <= p; ++k) {
    d[idx(k)].reserve(idx(len));
    for (int n = 1; n <= len; ++n)
      d[idx(k)].push_back(side == Side::plus ? wnd.at(k, n + r) : wnd.at(k, r - n - k));
  }
  return DiagonalSequences<S>(p, std::move(d));
}

template <class S>
WeylSystem<S> phi_pm_series(const TwoSidedWindow<S>& wnd, int r, Side side, int order) {
  const int p = wnd.bands();
  const int need = weyl_window(p, order);
  const int have = one_sided_length(p, wnd.half_width(), r, side);
  if (have < need) {
    throw InsufficientWindow(std::string("phi_pm_series: ") + (side == Side::plus ? "plus" : "minus") +
                                 " side at site " + std::to_string(r),
                             need, have);
  }
  return weyl_series(extract_one_sided(wnd, r, side), order);
}

int w_series_half_width(int p, int j, int order) {
  const int w = weyl_window(p, order);
  return std::max({j + w, w + p - j, std::abs(j) + p});
}

template <class S>
Laurent<S> d_series(const TwoSidedWindow<S>& wnd, int j, int order) {
  const int p = wnd.bands();
  const int need = w_series_half_width(p, j, order);
  if (wnd.half_width() < need)
    throw InsufficientWindow("w_series at site " + std::to_string(j), need, wnd.half_width());
  Laurent<S> d = Laurent<S>::constant(wnd.at(0, j), order);
  if (p == 0) return d;
  const auto plus = phi_pm_series(wnd, j, Side::plus, order);
  const auto minus = phi_pm_series(wnd, j, Side::minus, order);
  for (int ell = 1; ell <= p; ++ell) {
    for (int k = 0; k <= ell; ++k) {
      const S& a = wnd.at(ell, j - k);
      if (ScalarTraits<S>::is_zero(a)) continue;
      d += multiply(plus(ell - k), minus(k)) * a;
    }
  }
  return d;
}

template <class S>
Laurent<S> w_series(const TwoSidedWindow<S>& wnd, int j, int order) {
  return resolvent_reciprocal(d_series(wnd, j, order));
}

// ---------------------------------------------------------------------------
// Central truncation

template <class S>
std::vector<S> central_power_entries(const TwoSidedWindow<S>& wnd, int j, int s_max) {
  const int p = wnd.bands();
  const int half = wnd.half_width();
  if (!wnd.contains(j)) throw InsufficientWindow("central_power_entries: site", std::abs(j), half);
  std::vector<S> v(idx(2 * half + 1), ScalarTraits<S>::zero());
  v[idx(j + half)] = ScalarTraits<S>::one();
  std::vector<S> out;
  out.push_back(ScalarTraits<S>::one());
  int lo = j;
  int hi = j;
  for (int s = 1; s <= s_max; ++s) {
    std::vector<S> next(v.size(), ScalarTraits<S>::zero());
    for (int n = lo; n <= hi; ++n) {
      const S& x = v[idx(n + half)];
      if (ScalarTraits<S>::is_zero(x)) continue;
      if (n - 1 >= -half) next[idx(n - 1 + half)] += x;
      for (int k = 0; k <= p && n + k <= half; ++k) {
        const S& a = wnd.at(k, n);
        if (!ScalarTraits<S>::is_zero(a)) next[idx(n + k + half)] += a * x;
      }
    }
    lo = std::max(lo - 1, -half);
    hi = std::min(hi + p, half);
    v = std::move(next);
    out.push_back(v[idx(j + half)]);
  }
  return out;
}

int central_check_half_width(int p, int j, int s_max) {
  return std::max(w_series_half_width(p, j, s_max), std::abs(j) + p * s_max + p);
}

template <class S>
std::vector<bool> central_coefficient_check(const TwoSidedWindow<S>& wnd, int j, int s_max) {
  const int p = wnd.bands();
  const int need = central_check_half_width(p, j, s_max);
  if (wnd.half_width() < need)
    throw InsufficientWindow("central_coefficient_check at site " + std::to_string(j), need,
                             wnd.half_width());
  const auto w = w_series(wnd, j, s_max);
  const auto entries = central_power_entries(wnd, j, s_max);
  double scale = 1.0;
  for (const S& e : entries) scale = std::max(scale, ScalarTraits<S>::magnitude(e));
  std::vector<bool> ok;
  for (int s = 0; s <= s_max; ++s) ok.push_back(negligible(S(w[s + 1] - entries[idx(s)]), scale));
  return ok;
}

template <class S>
BandedHessenberg<S> central_truncation(const TwoSidedWindow<S>& wnd, int lo, int hi) {
  if (lo > hi) throw PreconditionViolation("central_truncation: empty site range");
  if (!wnd.contains(lo) || !wnd.contains(hi))
    throw InsufficientWindow("central_truncation", std::max(-lo, hi), wnd.half_width());
  const int m = hi - lo + 1;
  const int p = wnd.bands();
  std::vector<std::vector<S>> d(idx(p + 1));
  for (int k = 0; k <= p; ++k)
    for (int i = 1; i <= m - k; ++i) d[idx(k)].push_back(wnd.at(k, lo + i - 1));
  return BandedHessenberg<S>(m, p, std::move(d));
}

// ---------------------------------------------------------------------------
// Vanishing orders

bool VanishingReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VanishingCheck& c) { return c.informational || c.passed; });
}

namespace {

struct SitePlan {
  int site;
  int n_plus;      // N' = hi - site
  int n_minus;     // N'' = site - lo
  int main_order;  // hard vanishing order of the main difference
  int phi_plus_order;
  int phi_minus_order;
  int w_order;     // order of w (= d order + 1)
};

struct Range {
  int lo;
  int hi;
};

Range truncation_range(int n, Parity parity) {
  return parity == Parity::odd ? Range{-n, n} : Range{-n + 1, n};
}

int phi_requirement(int big_n, int t, int p) { return big_n + 1 + floor_div(big_n - t, p); }

std::vector<SitePlan> plan_sites(int p, int n, Parity parity) {
  const auto [lo, hi] = truncation_range(n, parity);
  std::vector<SitePlan> plans;
  for (int j = lo; j <= hi; ++j) {
    SitePlan sp{};
    sp.site = j;
    sp.n_plus = hi - j;
    sp.n_minus = j - lo;
    const int gap = n - std::abs(j);
    sp.main_order = (parity == Parity::odd ? gap + 2 : gap) + floor_div(gap, p);
    sp.phi_plus_order = 0;
    sp.phi_minus_order = 0;
    for (int t = 1; t <= p; ++t) {
      sp.phi_plus_order = std::max(sp.phi_plus_order, phi_requirement(sp.n_plus, t, p) + 1);
      sp.phi_minus_order = std::max(sp.phi_minus_order, phi_requirement(sp.n_minus, t, p) + 1);
    }
    sp.w_order = sp.main_order + 2;  // one past the informational order
    plans.push_back(sp);
  }
  return plans;
}

}  // namespace

int vanishing_half_width(int p, int n, Parity parity) {
  int need = n;
  for (const auto& sp : plan_sites(p, n, parity)) {
    const int j = sp.site;
    need = std::max(need, w_series_half_width(p, j, sp.w_order - 1));
    need = std::max(need, j + weyl_window(p, sp.phi_plus_order));
    need = std::max(need, weyl_window(p, sp.phi_minus_order) + p - j);
  }
  return need;
}

template <class S>
VanishingReport vanishing_order_suite(const TwoSidedWindow<S>& wnd, int n, Parity parity) {
  const int p = wnd.bands();
  if (n < 1 || p < 1) throw PreconditionViolation("vanishing_order_suite: need n >= 1, p >= 1");
  const int need = vanishing_half_width(p, n, parity);
  if (wnd.half_width() < need)
    throw InsufficientWindow("vanishing_order_suite", need, wnd.half_width());

  const auto [lo, hi] = truncation_range(n, parity);
  const auto mat = central_truncation(wnd, lo, hi);
  const auto fam = char_poly_family(mat);

  VanishingReport report;
  report.n = n;
  report.parity = parity;

  auto record = [&](std::string name, int site, int index, int required, bool informational,
                    const Laurent<S>& diff, double scale) {
    VanishingCheck c;
    c.name = std::move(name);
    c.site = site;
    c.index = index;
    c.required = required;
    c.informational = informational;
    c.first_nonzero = first_significant(diff.truncated(std::min(diff.order(), required + 1)), scale);
    c.passed = c.first_nonzero < 0 || c.first_nonzero > required;
    report.checks.push_back(std::move(c));
  };

  for (const auto& sp : plan_sites(p, n, parity)) {
    const int j = sp.site;
    const auto plus = phi_pm_series(wnd, j, Side::plus, sp.phi_plus_order);
    const auto minus = phi_pm_series(wnd, j, Side::minus, sp.phi_minus_order);
    for (int t = 1; t <= p; ++t) {
      const auto approx_plus = series_at_infinity(fam.trailing(sp.n_plus - t),
                                                  fam.trailing(sp.n_plus), sp.phi_plus_order);
      record("phi_plus", j, t, phi_requirement(sp.n_plus, t, p), false, plus(t) - approx_plus,
             std::max(1.0, max_magnitude(plus(t))));
      const auto approx_minus = series_at_infinity(fam.leading(sp.n_minus - t),
                                                   fam.leading(sp.n_minus), sp.phi_minus_order);
      record("phi_minus", j, t, phi_requirement(sp.n_minus, t, p), false, minus(t) - approx_minus,
             std::max(1.0, max_magnitude(minus(t))));
    }

    const auto w = w_series(wnd, j, sp.w_order - 1);
    const auto ratio = series_at_infinity(fam.trailing(sp.n_plus) * fam.leading(sp.n_minus), fam.q,
                                          sp.w_order);
    const auto diff = ratio - w;
    const double scale = std::max(1.0, max_magnitude(w));
    record("main", j, 0, sp.main_order, false, diff, scale);
    if (parity == Parity::odd) record("main_display", j, 0, sp.main_order + 1, true, diff, scale);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Multinomial expansion of w_0

template <class S>
Laurent<S> w0_multinomial_expansion(const TwoSidedWindow<S>& wnd, int max_r, int order) {
  const int p = wnd.bands();
  if (max_r < 0 || max_r > order) throw PreconditionViolation("w0_multinomial_expansion: need 0 <= R <= N");
  const int need = w_series_half_width(p, 0, order);
  if (wnd.half_width() < need)
    throw InsufficientWindow("w0_multinomial_expansion", need, wnd.half_width());

  const int out_order = order + 1;
  std::vector<SeriesPowers<S>> plus_pow;
  std::vector<SeriesPowers<S>> minus_pow;
  if (p > 0) {
    const auto plus = phi_pm_series(wnd, 0, Side::plus, order);
    const auto minus = phi_pm_series(wnd, 0, Side::minus, order);
    for (int j = 1; j <= p; ++j) {
      plus_pow.emplace_back(plus(j));
      minus_pow.emplace_back(minus(j));
    }
  }

  // Slot i (1-based) of the flattened triangle carries a_{-s}^{(l)} with i = flat_index(s, l).
  const int slots = triangle_size(p);
  std::vector<S> slot_value(idx(slots));
  for (int ell = 0; ell <= p; ++ell)
    for (int s = 0; s <= ell; ++s) slot_value[idx(flat_index(s, ell) - 1)] = wnd.at(ell, -s);

  using Key = std::tuple<int, IndexVector, IndexVector>;
  std::map<Key, S> grouped;
  for (int r = 0; r <= max_r; ++r) {
    for_each_composition(r, slots, [&](std::span<const int> k) {
      auto alpha = alpha_vector(k, p);
      auto beta = beta_vector(k, p);
      int reach = r + 1;
      for (int j = 1; j <= p; ++j) reach += j * (alpha[idx(j - 1)] + beta[idx(j - 1)]);
      if (reach > out_order) return;
      S c = ScalarTraits<S>::one();
      for (int i = 0; i < slots; ++i) {
        if (k[idx(i)] == 0) continue;
        c *= ipow(slot_value[idx(i)], static_cast<unsigned>(k[idx(i)]));
        if (ScalarTraits<S>::is_zero(c)) return;
      }
      c *= ScalarTraits<S>::from_bigint(multinomial(r, k));
      auto [it, inserted] = grouped.try_emplace(Key{r, std::move(alpha), std::move(beta)}, c);
      if (!inserted) it->second += c;
    });
  }

  Laurent<S> out(out_order);
  for (const auto& [key, c] : grouped) {
    if (ScalarTraits<S>::is_zero(c)) continue;
    const auto& [r, alpha, beta] = key;
    Laurent<S> term = Laurent<S>::unit(order);
    for (int j = 1; j <= p; ++j) {
      if (alpha[idx(j - 1)] > 0) term = multiply(term, plus_pow[idx(j - 1)](alpha[idx(j - 1)]));
      if (beta[idx(j - 1)] > 0) term = multiply(term, minus_pow[idx(j - 1)](beta[idx(j - 1)]));
    }
    // z^{-(r+1)} term, placed into the order N+1 result.
    for (int m = 0; m + r + 1 <= out_order && m <= term.order(); ++m) out[m + r + 1] += c * term[m];
  }
  return out;
}

#define BHM_INSTANTIATE(S)                                                                     \
  template class TwoSidedWindow<S>;                                                            \
  template DiagonalSequences<S> extract_one_sided(const TwoSidedWindow<S>&, int, Side);        \
  template WeylSystem<S> phi_pm_series(const TwoSidedWindow<S>&, int, Side, int);              \
  template Laurent<S> d_series(const TwoSidedWindow<S>&, int, int);                            \
  template Laurent<S> w_series(const TwoSidedWindow<S>&, int, int);                            \
  template std::vector<S> central_power_entries(const TwoSidedWindow<S>&, int, int);           \
  template std::vector<bool> central_coefficient_check(const TwoSidedWindow<S>&, int, int);    \
  template BandedHessenberg<S> central_truncation(const TwoSidedWindow<S>&, int, int);         \
  template VanishingReport vanishing_order_suite(const TwoSidedWindow<S>&, int, Parity);       \
  template Laurent<S> w0_multinomial_expansion(const TwoSidedWindow<S>&, int, int);

BHM_INSTANTIATE(Complex)
BHM_INSTANTIATE(ExactComplex)

#undef BHM_INSTANTIATE

}  // namespace bhm
