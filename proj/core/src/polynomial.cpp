#include "bhm/polynomial.hpp"

#include <algorithm>

#include "bhm/errors.hpp"

namespace bhm {

template <class S>
Polynomial<S>::Polynomial(std::vector<S> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

template <class S>
void Polynomial<S>::trim() {
  while (!coeffs_.empty() && ScalarTraits<S>::is_zero(coeffs_.back())) coeffs_.pop_back();
}

template <class S>
Polynomial<S> Polynomial<S>::constant(const S& c) {
  return Polynomial(std::vector<S>{c});
}

template <class S>
Polynomial<S> Polynomial<S>::linear(const S& c) {
  return Polynomial(std::vector<S>{-c, ScalarTraits<S>::one()});
}

template <class S>
Polynomial<S> Polynomial<S>::monomial(int n) {
  std::vector<S> c(static_cast<std::size_t>(n) + 1, ScalarTraits<S>::zero());
  c.back() = ScalarTraits<S>::one();
  return Polynomial(std::move(c));
}

template <class S>
bool Polynomial<S>::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == ScalarTraits<S>::one();
}

template <class S>
S Polynomial<S>::coefficient(int i) const {
  if (i < 0 || i > degree()) return ScalarTraits<S>::zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

template <class S>
S Polynomial<S>::evaluate(const S& z) const {
  S acc = ScalarTraits<S>::zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

template <class S>
Polynomial<S> Polynomial<S>::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<S> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * ScalarTraits<S>::from_int(static_cast<long>(i));
  }
  return Polynomial(std::move(d));
}

template <class S>
Polynomial<S>& Polynomial<S>::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

template <class S>
Polynomial<S>& Polynomial<S>::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ScalarTraits<S>::zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

template <class S>
Polynomial<S>& Polynomial<S>::operator*=(const S& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

template <class S>
Polynomial<S> operator*(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  std::vector<S> out(ac.size() + bc.size() - 1, ScalarTraits<S>::zero());
  S term;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ScalarTraits<S>::is_zero(ac[i])) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      term = ac[i];
      term *= bc[j];
      out[i + j] += term;
    }
  }
  return Polynomial<S>(std::move(out));
}

template <class S>
Laurent<S> series_at_infinity(const Polynomial<S>& num, const Polynomial<S>& den, int order) {
  if (den.is_zero()) throw PreconditionViolation("series_at_infinity: zero denominator");
  const int d = den.degree();
  if (num.degree() > d) {
    throw PreconditionViolation("series_at_infinity: numerator degree exceeds denominator degree");
  }
  // num(z) = den(z) * sum_k c_k z^{-k}; match the coefficient of z^{d-k}.
  const S lead = den.coefficient(d);
  Laurent<S> c(order);
  S term;
  for (int k = 0; k <= order; ++k) {
    S acc = num.coefficient(d - k);
    for (int i = std::max(0, k - d); i < k; ++i) {
      if (ScalarTraits<S>::is_zero(c[i])) continue;
      term = den.coefficient(d - k + i);
      term *= c[i];
      acc -= term;
    }
    if (lead != ScalarTraits<S>::one()) acc /= lead;
    c[k] = std::move(acc);
  }
  return c;
}

template <class S>
double max_magnitude(const Polynomial<S>& p) {
  double m = 0.0;
  for (const auto& c : p.coefficients()) m = std::max(m, ScalarTraits<S>::magnitude(c));
  return m;
}

#define BHM_INSTANTIATE(S)                                                             \
  template class Polynomial<S>;                                                        \
  template Polynomial<S> operator*(const Polynomial<S>&, const Polynomial<S>&);        \
  template Laurent<S> series_at_infinity(const Polynomial<S>&, const Polynomial<S>&,   \
                                         int);                                         \
  template double max_magnitude(const Polynomial<S>&);

BHM_INSTANTIATE(Complex)
BHM_INSTANTIATE(ExactComplex)

#undef BHM_INSTANTIATE

}  // namespace bhm
