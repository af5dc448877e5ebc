#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bhm/scalar.hpp"

namespace bhm {

/// Truncated Laurent series at infinity, sum_{k=0}^{N} c_k z^{-k}.
///
/// The order N is part of the value: coefficients past N are unknown, not
/// zero, and asking for one throws TruncationExceeded. Binary operations
/// truncate to the smaller operand order.
template <class S>
class Laurent {
 public:
  explicit Laurent(int order);
  explicit Laurent(std::vector<S> coefficients);

  static Laurent zero(int order) { return Laurent(order); }
  static Laurent unit(int order);
  /// c * z^{-power}, stored to `order`.
  static Laurent monomial(int power, int order, const S& c = ScalarTraits<S>::one());
  static Laurent constant(const S& c, int order) { return monomial(0, order, c); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// [f]_k; throws TruncationExceeded when k > order().
  const S& at(int k) const;
  S& at(int k);
  const S& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  S& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  std::span<const S> coefficients() const { return coeffs_; }

  Laurent truncated(int order) const;
  bool is_zero() const;
  /// Index of the first nonzero coefficient, or -1 when the stored part is zero.
  int leading_index() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const S& c);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const S& c) { return a *= c; }
  friend Laurent operator*(const S& c, Laurent a) { return a *= c; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<S> coeffs_;
};

template <class S>
Laurent<S> linear_combine(const S& a, const Laurent<S>& f, const S& b, const Laurent<S>& g);

/// Cauchy product truncated to min(order(f), order(g)).
template <class S>
Laurent<S> multiply(const Laurent<S>& f, const Laurent<S>& g);

template <class S>
Laurent<S> operator*(const Laurent<S>& f, const Laurent<S>& g) {
  return multiply(f, g);
}

template <class S>
Laurent<S> power(const Laurent<S>& f, int m);

/// Series of 1/(z - d(z)) to order(d) + 1, via (1/z) sum_m (d/z)^m.
template <class S>
Laurent<S> resolvent_reciprocal(const Laurent<S>& d);

/// [f]_k with the truncation contract enforced.
template <class S>
const S& coefficient_at(const Laurent<S>& f, int k) {
  return f.at(k);
}

/// z^{-m} f, keeping the order of f (coefficients shifted past N are dropped).
template <class S>
Laurent<S> shift_down(const Laurent<S>& f, int m);

/// z f for a series with [f]_0 = 0; the order drops by one.
template <class S>
Laurent<S> multiply_by_z(const Laurent<S>& f);

/// Sum of the stored terms at a point (plain Horner in 1/z).
template <class S>
Complex evaluate(const Laurent<S>& f, Complex z);

/// Largest coefficient magnitude, used as a scale for float tolerances.
template <class S>
double max_magnitude(const Laurent<S>& f);

/// Memoized powers f^0, f^1, ... of one series.
template <class S>
class SeriesPowers {
 public:
  explicit SeriesPowers(Laurent<S> base) : base_(std::move(base)) {
    powers_.push_back(Laurent<S>::unit(base_.order()));
  }
  const Laurent<S>& operator()(int e) {
    while (static_cast<int>(powers_.size()) <= e) powers_.push_back(multiply(powers_.back(), base_));
    return powers_[static_cast<std::size_t>(e)];
  }

 private:
  Laurent<S> base_;
  std::vector<Laurent<S>> powers_;
};

extern template class Laurent<Complex>;
extern template class Laurent<ExactComplex>;

}  // namespace bhm
