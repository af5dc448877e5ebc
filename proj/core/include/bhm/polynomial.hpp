#pragma once

#include <span>
#include <vector>

#include "bhm/laurent.hpp"
#include "bhm/scalar.hpp"

namespace bhm {

/// Dense polynomial with ascending coefficients; trailing exact zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
template <class S>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<S> ascending);

  static Polynomial constant(const S& c);
  static Polynomial one() { return constant(ScalarTraits<S>::one()); }
  /// z - c
  static Polynomial linear(const S& c);
  /// z^n
  static Polynomial monomial(int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  /// Coefficient of z^i; zero outside 0..degree.
  S coefficient(int i) const;
  std::span<const S> coefficients() const { return coeffs_; }

  S evaluate(const S& z) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const S& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& c) { return a *= c; }
  friend Polynomial operator*(const S& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<S> coeffs_;
};

template <class S>
Polynomial<S> operator*(const Polynomial<S>& a, const Polynomial<S>& b);

/// Laurent expansion at infinity of num/den to `order`, by long division.
/// Requires deg num <= deg den and an invertible leading coefficient of den.
template <class S>
Laurent<S> series_at_infinity(const Polynomial<S>& num, const Polynomial<S>& den, int order);

/// Largest coefficient magnitude.
template <class S>
double max_magnitude(const Polynomial<S>& p);

extern template class Polynomial<Complex>;
extern template class Polynomial<ExactComplex>;

}  // namespace bhm
