#include "bhm/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bhm/errors.hpp"

namespace bhm {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

// ---------------------------------------------------------------------------
// DiagonalSequences

template <class S>
DiagonalSequences<S>::DiagonalSequences(int p, std::vector<std::vector<S>> diagonals)
    : p_(p), length_(0), diags_(std::move(diagonals)) {
  if (p < 0) throw PreconditionViolation("DiagonalSequences: p must be nonnegative");
  if (diags_.size() != idx(p + 1))
    throw PreconditionViolation("DiagonalSequences: expected p+1 diagonals");
  length_ = static_cast<int>(diags_[0].size());
  for (const auto& d : diags_)
    if (d.size() != idx(length_))
      throw PreconditionViolation("DiagonalSequences: diagonals differ in length");
}

template <class S>
DiagonalSequences<S> DiagonalSequences<S>::constant(std::span<const S> values, int length) {
  if (values.empty()) throw PreconditionViolation("DiagonalSequences: no values");
  std::vector<std::vector<S>> d;
  d.reserve(values.size());
  for (const S& v : values) d.emplace_back(idx(length), v);
  return DiagonalSequences(static_cast<int>(values.size()) - 1, std::move(d));
}

template <class S>
const S& DiagonalSequences<S>::at(int k, int n) const {
  if (k < 0 || k > p_) throw PreconditionViolation("DiagonalSequences: diagonal out of range");
  if (n < 1 || n > length_)
    throw InsufficientWindow("sequence index " + std::to_string(n) + " outside window", n,
                             length_);
  return diags_[idx(k)][idx(n - 1)];
}

template <class S>
DiagonalSequences<S> DiagonalSequences<S>::shifted(int shift) const {
  if (shift < 0 || shift > length_)
    throw InsufficientWindow("shift exceeds window", shift, length_);
  std::vector<std::vector<S>> d;
  d.reserve(diags_.size());
  for (const auto& v : diags_) d.emplace_back(v.begin() + shift, v.end());
  return DiagonalSequences(p_, std::move(d));
}

// ---------------------------------------------------------------------------
// BandedHessenberg

template <class S>
BandedHessenberg<S>::BandedHessenberg(int n, int p, std::vector<std::vector<S>> diagonals)
    : n_(n), p_(p), diags_(std::move(diagonals)) {
  if (n < 1 || p < 0) throw PreconditionViolation("BandedHessenberg: need n >= 1, p >= 0");
  if (diags_.size() != idx(p + 1))
    throw PreconditionViolation("BandedHessenberg: expected p+1 diagonals");
  for (int k = 0; k <= p; ++k)
    if (diags_[idx(k)].size() != idx(std::max(n - k, 0)))
      throw PreconditionViolation("BandedHessenberg: diagonal " + std::to_string(k) +
                                  " must have n-k entries");
}

template <class S>
BandedHessenberg<S> BandedHessenberg<S>::leading(const DiagonalSequences<S>& seqs, int n) {
  if (n > seqs.length()) throw InsufficientWindow("leading truncation", n, seqs.length());
  std::vector<std::vector<S>> d;
  for (int k = 0; k <= seqs.bands(); ++k) {
    auto src = seqs.diagonal(k);
    d.emplace_back(src.begin(), src.begin() + std::max(n - k, 0));
  }
  return BandedHessenberg(n, seqs.bands(), std::move(d));
}

template <class S>
BandedHessenberg<S> BandedHessenberg<S>::zeros(int n, int p) {
  std::vector<std::vector<S>> d;
  for (int k = 0; k <= p; ++k) d.emplace_back(idx(std::max(n - k, 0)), ScalarTraits<S>::zero());
  return BandedHessenberg(n, p, std::move(d));
}

template <class S>
const S& BandedHessenberg<S>::coefficient(int k, int j) const {
  if (!has_coefficient(k, j)) throw PreconditionViolation("BandedHessenberg: no such coefficient");
  return diags_[idx(k)][idx(j - 1)];
}

template <class S>
S& BandedHessenberg<S>::coefficient(int k, int j) {
  if (!has_coefficient(k, j)) throw PreconditionViolation("BandedHessenberg: no such coefficient");
  return diags_[idx(k)][idx(j - 1)];
}

template <class S>
S BandedHessenberg<S>::entry(int i, int j) const {
  if (j == i + 1) return ScalarTraits<S>::one();
  const int k = i - j;
  if (has_coefficient(k, j)) return diags_[idx(k)][idx(j - 1)];
  return ScalarTraits<S>::zero();
}

template <class S>
std::vector<std::vector<S>> BandedHessenberg<S>::dense() const {
  std::vector<std::vector<S>> m(idx(n_), std::vector<S>(idx(n_), ScalarTraits<S>::zero()));
  for (int i = 1; i <= n_; ++i)
    for (int j = std::max(1, i - p_); j <= std::min(n_, i + 1); ++j) m[idx(i - 1)][idx(j - 1)] = entry(i, j);
  return m;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials

template <class S>
const Polynomial<S>& PolynomialFamily<S>::zero_poly() {
  static const Polynomial<S> z;
  return z;
}

template <class S>
const Polynomial<S>& PolynomialFamily<S>::trailing(int ell) const {
  if (ell < 0) return zero_poly();
  if (ell == size()) return q;
  if (ell > size()) throw PreconditionViolation("trailing minor index exceeds n");
  return plus[idx(ell)];
}

template <class S>
const Polynomial<S>& PolynomialFamily<S>::leading(int ell) const {
  if (ell < 0) return zero_poly();
  if (ell == size()) return q;
  if (ell > size()) throw PreconditionViolation("leading minor index exceeds n");
  return minus[idx(ell)];
}

template <class S>
PolynomialFamily<S> char_poly_family(const BandedHessenberg<S>& b) {
  const int n = b.size();
  const int p = b.bands();

  // Leading minors: last-row expansion, Q_m = (z - b_m^0) Q_{m-1} - sum_k b_{m-k}^k Q_{m-1-k}.
  std::vector<Polynomial<S>> lead;
  lead.reserve(idx(n + 1));
  lead.push_back(Polynomial<S>::one());
  for (int m = 1; m <= n; ++m) {
    Polynomial<S> next = Polynomial<S>::linear(b.coefficient(0, m)) * lead[idx(m - 1)];
    for (int k = 1; k <= p && m - 1 - k >= 0; ++k) next -= lead[idx(m - 1 - k)] * b.coefficient(k, m - k);
    lead.push_back(std::move(next));
  }

  // Trailing minors: first-column expansion of the block starting at row s = n - ell + 1.
  std::vector<Polynomial<S>> trail;
  trail.reserve(idx(n));
  trail.push_back(Polynomial<S>::one());
  for (int ell = 1; ell < n; ++ell) {
    const int s = n - ell + 1;
    Polynomial<S> next = Polynomial<S>::linear(b.coefficient(0, s)) * trail[idx(ell - 1)];
    for (int k = 1; k <= p && ell - 1 - k >= 0; ++k) next -= trail[idx(ell - 1 - k)] * b.coefficient(k, s);
    trail.push_back(std::move(next));
  }

  PolynomialFamily<S> fam;
  fam.q = std::move(lead[idx(n)]);
  lead.pop_back();
  fam.minus = std::move(lead);
  fam.plus = std::move(trail);
  return fam;
}

template <class S>
Polynomial<S> derivative_identity_residual(const PolynomialFamily<S>& fam) {
  const int n = fam.size();
  Polynomial<S> r = fam.q.derivative();
  for (int j = 1; j <= n; ++j) r -= fam.trailing(n - j) * fam.leading(j - 1);
  return r;
}

template <class S>
Polynomial<S> row_expansion_residual(const BandedHessenberg<S>& b, const PolynomialFamily<S>& fam,
                                     int j) {
  const int n = b.size();
  if (j < 1 || j > n) throw PreconditionViolation("row_expansion_residual: j out of range");
  Polynomial<S> r = fam.q;
  r -= Polynomial<S>::linear(b.coefficient(0, j)) * fam.trailing(n - j) * fam.leading(j - 1);
  for (int ell = 1; ell <= b.bands(); ++ell) {
    for (int k = 0; k <= ell; ++k) {
      const int plus_index = n - j + k - ell;
      const int minus_index = j - k - 1;
      if (plus_index < 0 || minus_index < 0) continue;
      r += fam.trailing(plus_index) * fam.leading(minus_index) * b.coefficient(ell, j - k);
    }
  }
  return r;
}

namespace {

template <class S>
bool negligible(const S& value, double scale) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)scale;
    return value.is_zero();
  } else {
    return std::abs(value) <= 64.0 * 2.220446049250313e-16 * scale;
  }
}

template <class S>
double evaluation_scale(const Polynomial<S>& poly, const S& z) {
  const double az = ScalarTraits<S>::magnitude(z);
  double scale = 0.0;
  double zpow = 1.0;
  for (const S& c : poly.coefficients()) {
    scale += ScalarTraits<S>::magnitude(c) * zpow;
    zpow *= az;
  }
  return scale;
}

}  // namespace

template <class S>
S resolvent_entry_poly(const PolynomialFamily<S>& fam, const S& z, int i, int j) {
  const int n = fam.size();
  if (j < 1 || j > n || !(i == j || i == 1))
    throw PreconditionViolation("resolvent_entry_poly: only (j,j) and (1,j) entries");
  const S qz = fam.q.evaluate(z);
  if (negligible(qz, evaluation_scale(fam.q, z)))
    throw EigenvalueHit("resolvent_entry_poly: z is a root of Q_n");
  S num = fam.trailing(n - j).evaluate(z);
  if (i == j) num *= fam.leading(j - 1).evaluate(z);
  return num / qz;
}

template <class S>
S resolvent_entry_dense_oracle(const BandedHessenberg<S>& b, const S& z, int i, int j) {
  const int n = b.size();
  if (n > 64) throw PreconditionViolation("dense oracle limited to n <= 64");
  if (i < 1 || i > n || j < 1 || j > n) throw PreconditionViolation("dense oracle: index");

  // Solve (zI - B) x = e_j; the answer is x_i.
  auto a = b.dense();
  double norm = 0.0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[idx(r)][idx(c)] = -a[idx(r)][idx(c)];
    a[idx(r)][idx(r)] += z;
    for (int c = 0; c < n; ++c) norm = std::max(norm, ScalarTraits<S>::magnitude(a[idx(r)][idx(c)]));
  }
  std::vector<S> x(idx(n), ScalarTraits<S>::zero());
  x[idx(j - 1)] = ScalarTraits<S>::one();

  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = ScalarTraits<S>::magnitude(a[idx(col)][idx(col)]);
    for (int r = col + 1; r < n; ++r) {
      const double m = ScalarTraits<S>::magnitude(a[idx(r)][idx(col)]);
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (negligible(a[idx(piv)][idx(col)], norm * n))
      throw EigenvalueHit("dense oracle: zI - B is singular");
    if (piv != col) {
      std::swap(a[idx(piv)], a[idx(col)]);
      std::swap(x[idx(piv)], x[idx(col)]);
    }
    const S inv = ScalarTraits<S>::one() / a[idx(col)][idx(col)];
    for (int r = col + 1; r < n; ++r) {
      if (ScalarTraits<S>::is_zero(a[idx(r)][idx(col)])) continue;
      const S f = a[idx(r)][idx(col)] * inv;
      for (int c = col; c < n; ++c) a[idx(r)][idx(c)] -= f * a[idx(col)][idx(c)];
      x[idx(r)] -= f * x[idx(col)];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    S acc = x[idx(r)];
    for (int c = r + 1; c < n; ++c) acc -= a[idx(r)][idx(c)] * x[idx(c)];
    x[idx(r)] = acc / a[idx(r)][idx(r)];
  }
  return x[idx(i - 1)];
}

// ---------------------------------------------------------------------------
// Powers

namespace {

/// Square matrix stored by rows over the band i - lower <= j <= i + upper.
template <class S>
struct BandMatrix {
  int n;
  int lower;
  int upper;
  std::vector<S> data;

  BandMatrix(int n_, int lower_, int upper_)
      : n(n_), lower(std::min(lower_, n_ - 1)), upper(std::min(upper_, n_ - 1)),
        data(idx(n_) * idx(lower + upper + 1), ScalarTraits<S>::zero()) {}

  int width() const { return lower + upper + 1; }
  S& at(int i, int j) { return data[idx(i) * idx(width()) + idx(j - i + lower)]; }
  const S& at(int i, int j) const { return data[idx(i) * idx(width()) + idx(j - i + lower)]; }
  int col_lo(int i) const { return std::max(0, i - lower); }
  int col_hi(int i) const { return std::min(n - 1, i + upper); }
};

}  // namespace

template <class S>
std::vector<S> trace_powers(const BandedHessenberg<S>& b, int s_max) {
  if (s_max < 0) throw PreconditionViolation("trace_powers: s_max must be nonnegative");
  const int n = b.size();
  const int p = b.bands();
  std::vector<S> traces;
  traces.reserve(idx(s_max + 1));
  traces.push_back(ScalarTraits<S>::from_int(n));
  if (s_max == 0) return traces;

  // Column c of B (0-based) has a 1 at row c-1 and b_{c+1}^{(t)} at row c+t.
  BandMatrix<S> pw(n, 0, 0);
  for (int i = 0; i < n; ++i) pw.at(i, i) = ScalarTraits<S>::one();
  for (int s = 1; s <= s_max; ++s) {
    BandMatrix<S> next(n, pw.lower + p, pw.upper + 1);
    for (int i = 0; i < n; ++i) {
      for (int c = next.col_lo(i); c <= next.col_hi(i); ++c) {
        S acc = ScalarTraits<S>::zero();
        const int k_lo = std::max({c - 1, pw.col_lo(i)});
        const int k_hi = std::min({c + p, pw.col_hi(i), n - 1});
        for (int k = k_lo; k <= k_hi; ++k) {
          const S& left = pw.at(i, k);
          if (ScalarTraits<S>::is_zero(left)) continue;
          if (k == c - 1)
            acc += left;
          else
            acc += left * b.coefficient(k - c, c + 1);
        }
        next.at(i, c) = std::move(acc);
      }
    }
    pw = std::move(next);
    S tr = ScalarTraits<S>::zero();
    for (int i = 0; i < n; ++i) tr += pw.at(i, i);
    traces.push_back(std::move(tr));
  }
  return traces;
}

template <class S>
std::vector<std::vector<S>> first_row_powers(const DiagonalSequences<S>& seqs, int s_max,
                                             int window) {
  const int p = seqs.bands();
  if (window > seqs.length()) throw InsufficientWindow("first_row_powers", window, seqs.length());
  // u = e_1^T H^t on the truncation of size `window`; support of u is 1..t+1.
  std::vector<S> u(idx(window) + 2, ScalarTraits<S>::zero());
  u[1] = ScalarTraits<S>::one();
  std::vector<std::vector<S>> out;
  out.reserve(idx(s_max + 1));
  const int keep = std::max(p, 1);
  auto snapshot = [&] {
    std::vector<S> row(idx(keep), ScalarTraits<S>::zero());
    for (int j = 1; j <= keep && j <= window; ++j) row[idx(j - 1)] = u[idx(j)];
    out.push_back(std::move(row));
  };
  snapshot();
  for (int t = 1; t <= s_max; ++t) {
    std::vector<S> v(u.size(), ScalarTraits<S>::zero());
    const int support = std::min(window, t);  // support of u before this step
    for (int c = 1; c <= std::min(window, t + 1); ++c) {
      S acc = ScalarTraits<S>::zero();
      if (c >= 2) acc += u[idx(c - 1)];
      for (int k = 0; k <= p && c + k <= std::min(window, support); ++k) {
        const S& uk = u[idx(c + k)];
        if (!ScalarTraits<S>::is_zero(uk)) acc += uk * seqs.at(k, c);
      }
      v[idx(c)] = std::move(acc);
    }
    u = std::move(v);
    snapshot();
  }
  return out;
}

template <class S>
S power_inner_product(const DiagonalSequences<S>& seqs, int s, int j) {
  if (s < 0 || j < 1) throw PreconditionViolation("power_inner_product: need s >= 0, j >= 1");
  const int need = locality_window(s, j, seqs.bands());
  if (seqs.length() < need) throw InsufficientWindow("power_inner_product", need, seqs.length());
  // e_1^T H^s has support 1..s+1, so only j <= s+1 can be nonzero.
  if (j > s + 1) return ScalarTraits<S>::zero();
  std::vector<S> u(idx(s) + 3, ScalarTraits<S>::zero());
  u[1] = ScalarTraits<S>::one();
  const int p = seqs.bands();
  for (int t = 1; t <= s; ++t) {
    std::vector<S> v(u.size(), ScalarTraits<S>::zero());
    for (int c = 1; c <= t + 1; ++c) {
      S acc = ScalarTraits<S>::zero();
      if (c >= 2) acc += u[idx(c - 1)];
      for (int k = 0; k <= p && c + k <= t; ++k) {
        const S& uk = u[idx(c + k)];
        if (!ScalarTraits<S>::is_zero(uk)) acc += uk * seqs.at(k, c);
      }
      v[idx(c)] = std::move(acc);
    }
    u = std::move(v);
  }
  return u[idx(j)];
}

#define BHM_INSTANTIATE(S)                                                                   \
  template class DiagonalSequences<S>;                                                       \
  template class BandedHessenberg<S>;                                                        \
  template struct PolynomialFamily<S>;                                                       \
  template PolynomialFamily<S> char_poly_family(const BandedHessenberg<S>&);                 \
  template Polynomial<S> derivative_identity_residual(const PolynomialFamily<S>&);           \
  template Polynomial<S> row_expansion_residual(const BandedHessenberg<S>&,                  \
                                                const PolynomialFamily<S>&, int);            \
  template S resolvent_entry_poly(const PolynomialFamily<S>&, const S&, int, int);           \
  template S resolvent_entry_dense_oracle(const BandedHessenberg<S>&, const S&, int, int);   \
  template std::vector<S> trace_powers(const BandedHessenberg<S>&, int);                     \
  template std::vector<std::vector<S>> first_row_powers(const DiagonalSequences<S>&, int,   \
                                                        int);                                \
  template S power_inner_product(const DiagonalSequences<S>&, int, int);

BHM_INSTANTIATE(Complex)
BHM_INSTANTIATE(ExactComplex)

#undef BHM_INSTANTIATE

}  // namespace bhm
