#include "bhm/scalar.hpp"

#include <cmath>
#include <stdexcept>

#include "bhm/errors.hpp"

namespace bhm {

ExactComplex ExactComplex::from_double(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw PreconditionViolation("ExactComplex: non-finite value");
  }
  return {Rational(re), Rational(im)};
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    if (!is_real()) im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_zero()) throw std::domain_error("ExactComplex: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (!is_real()) im_ /= o.re_;
    return *this;
  }
  Rational den = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  im_ = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  return *this;
}

std::string ExactComplex::to_string() const {
  if (is_real()) return re_.get_str();
  return "(" + re_.get_str() + "," + im_.get_str() + ")";
}

ExactComplex pow(const ExactComplex& base, unsigned exponent) { return ipow(base, exponent); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw PreconditionViolation("parse_rational: empty string");
  const auto dot = text.find('.');
  const auto exp = text.find_first_of("eE");
  if (dot == std::string::npos && exp == std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0) {
      throw PreconditionViolation("parse_rational: cannot parse '" + text + "'");
    }
    if (sgn(q.get_den()) == 0) throw PreconditionViolation("parse_rational: zero denominator");
    q.canonicalize();
    return q;
  }
  // Decimal literal: read it exactly as mantissa / 10^k rather than via double.
  std::string mant = exp == std::string::npos ? text : text.substr(0, exp);
  long e10 = exp == std::string::npos ? 0 : std::stol(text.substr(exp + 1));
  if (const auto d = mant.find('.'); d != std::string::npos) {
    e10 -= static_cast<long>(mant.size() - d - 1);
    mant.erase(d, 1);
  }
  BigInt m;
  if (m.set_str(mant, 10) != 0) {
    throw PreconditionViolation("parse_rational: cannot parse '" + text + "'");
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e10)));
  Rational q = e10 >= 0 ? Rational(m * scale) : Rational(m, scale);
  q.canonicalize();
  return q;
}

}  // namespace bhm
