#pragma once

#include <span>
#include <vector>

#include "bhm/polynomial.hpp"
#include "bhm/scalar.hpp"

namespace bhm {

/// One-sided diagonal data a_n^{(k)}, 0 <= k <= p, 1 <= n <= length(), of the
/// semi-infinite lower Hessenberg operator with unit superdiagonal.
template <class S>
class DiagonalSequences {
 public:
  DiagonalSequences(int p, std::vector<std::vector<S>> diagonals);
  /// a_n^{(k)} = values[k] for every n.
  static DiagonalSequences constant(std::span<const S> values, int length);

  int bands() const { return p_; }
  int length() const { return length_; }
  /// a_n^{(k)}; throws InsufficientWindow outside 1..length().
  const S& at(int k, int n) const;
  std::span<const S> diagonal(int k) const { return diags_[static_cast<std::size_t>(k)]; }
  /// The sequences of the operator with the first row and column removed: a_{n+shift}.
  DiagonalSequences shifted(int shift = 1) const;

 private:
  int p_;
  int length_;
  std::vector<std::vector<S>> diags_;
};

/// The n x n matrix with ones on the superdiagonal and b_j^{(k)} at (j+k, j).
template <class S>
class BandedHessenberg {
 public:
  /// diagonals[k] must hold exactly max(n-k, 0) entries b_1^{(k)}..b_{n-k}^{(k)}.
  BandedHessenberg(int n, int p, std::vector<std::vector<S>> diagonals);
  /// Leading n x n truncation H_n of the operator built from `seqs`.
  static BandedHessenberg leading(const DiagonalSequences<S>& seqs, int n);
  static BandedHessenberg zeros(int n, int p);

  int size() const { return n_; }
  int bands() const { return p_; }
  bool has_coefficient(int k, int j) const { return k >= 0 && k <= p_ && j >= 1 && j <= n_ - k; }
  /// b_j^{(k)} (1-based j).
  const S& coefficient(int k, int j) const;
  S& coefficient(int k, int j);
  /// Dense entry (1-based).
  S entry(int i, int j) const;
  std::vector<std::vector<S>> dense() const;

 private:
  int n_;
  int p_;
  std::vector<std::vector<S>> diags_;
};

/// Q_n together with the trailing (Q^+) and leading (Q^-) principal minors of zI - B.
template <class S>
struct PolynomialFamily {
  Polynomial<S> q;
  std::vector<Polynomial<S>> plus;   // Q_0^+ .. Q_{n-1}^+
  std::vector<Polynomial<S>> minus;  // Q_0^- .. Q_{n-1}^-

  int size() const { return static_cast<int>(plus.size()); }
  /// Q_ell^+ with Q_ell^+ = 0 for ell < 0 and Q_n^+ = Q_n.
  const Polynomial<S>& trailing(int ell) const;
  /// Q_ell^- with the same conventions.
  const Polynomial<S>& leading(int ell) const;

 private:
  static const Polynomial<S>& zero_poly();
};

template <class S>
PolynomialFamily<S> char_poly_family(const BandedHessenberg<S>& b);

/// Q_n' - sum_j Q_{n-j}^+ Q_{j-1}^-; the zero polynomial when the family is consistent.
template <class S>
Polynomial<S> derivative_identity_residual(const PolynomialFamily<S>& fam);

/// Q_n minus the expansion of det(zI - B) along row j in terms of Q^+ and Q^-.
template <class S>
Polynomial<S> row_expansion_residual(const BandedHessenberg<S>& b, const PolynomialFamily<S>& fam,
                                     int j);

/// (zI - B)^{-1}(i, j) from the family: diagonal (i == j) or first-row (i == 1) entries.
template <class S>
S resolvent_entry_poly(const PolynomialFamily<S>& fam, const S& z, int i, int j);

/// (zI - B)^{-1}(i, j) by dense elimination with partial pivoting (n <= 64).
template <class S>
S resolvent_entry_dense_oracle(const BandedHessenberg<S>& b, const S& z, int i, int j);

/// tr(B^s) for s = 0..s_max, by repeated banded products.
template <class S>
std::vector<S> trace_powers(const BandedHessenberg<S>& b, int s_max);

template <class S>
S trace_power(const BandedHessenberg<S>& b, int s) {
  return trace_powers(b, s).back();
}

/// Window length that makes <H^s e_j, e_1> on a truncation equal to the operator value:
/// any contributing walk stays below index j + s p.
constexpr int locality_window(int s, int j, int p) { return j + s * p + p; }

/// <H^s e_j, e_1> for the semi-infinite operator of `seqs`.
template <class S>
S power_inner_product(const DiagonalSequences<S>& seqs, int s, int j);

/// Row vectors e_1^T H^t restricted to columns 1..p, for t = 0..s_max, on a
/// truncation of size `window`. Entry [t][j-1] is <H^t e_j, e_1>.
template <class S>
std::vector<std::vector<S>> first_row_powers(const DiagonalSequences<S>& seqs, int s_max,
                                             int window);

extern template class DiagonalSequences<Complex>;
extern template class DiagonalSequences<ExactComplex>;
extern template class BandedHessenberg<Complex>;
extern template class BandedHessenberg<ExactComplex>;

}  // namespace bhm
