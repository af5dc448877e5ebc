#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace bhm {

using Complex = std::complex<double>;
using BigInt = mpz_class;
using Rational = mpq_class;

/// Gaussian rational: an exact complex number with rational parts.
///
/// Arithmetic keeps a fast path for purely real operands, which is the
/// common case for integer and atom-valued ensembles.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational re) : re_(std::move(re)) {}  // NOLINT
  ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Exact conversion: every finite double is a dyadic rational.
  static ExactComplex from_double(double re, double im = 0.0);
  static ExactComplex from_complex(const Complex& z) { return from_double(z.real(), z.imag()); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  double magnitude() const { return std::abs(to_complex()); }

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(ExactComplex a) {
    a.re_ = -a.re_;
    a.im_ = -a.im_;
    return a;
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

ExactComplex pow(const ExactComplex& base, unsigned exponent);

/// Parses "3", "-7/4", "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

/// Uniform access to the two scalar backends used throughout the library.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex from_bigint(const BigInt& v) { return {v.get_d(), 0.0}; }
  static Complex from_exact(const ExactComplex& v) { return v.to_complex(); }
  static Complex from_complex(const Complex& v) { return v; }
  static Complex to_complex(const Complex& v) { return v; }
  static bool is_zero(const Complex& v) { return v == Complex{}; }
  static double magnitude(const Complex& v) { return std::abs(v); }
};

template <>
struct ScalarTraits<ExactComplex> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static ExactComplex zero() { return {}; }
  static ExactComplex one() { return ExactComplex(1L); }
  static ExactComplex from_int(long v) { return ExactComplex(v); }
  static ExactComplex from_bigint(const BigInt& v) { return ExactComplex(Rational(v)); }
  static ExactComplex from_exact(const ExactComplex& v) { return v; }
  static ExactComplex from_complex(const Complex& v) { return ExactComplex::from_complex(v); }
  static Complex to_complex(const ExactComplex& v) { return v.to_complex(); }
  static bool is_zero(const ExactComplex& v) { return v.is_zero(); }
  static double magnitude(const ExactComplex& v) { return v.magnitude(); }
};

template <class S>
S ipow(S base, unsigned exponent) {
  S result = ScalarTraits<S>::one();
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace bhm
