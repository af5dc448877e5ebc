#include "bhm/laurent.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bhm/errors.hpp"

namespace bhm {

template <class S>
Laurent<S>::Laurent(int order) {
  if (order < 0) throw PreconditionViolation("Laurent: negative order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, ScalarTraits<S>::zero());
}

template <class S>
Laurent<S>::Laurent(std::vector<S> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw PreconditionViolation("Laurent: empty coefficient list");
}

template <class S>
Laurent<S> Laurent<S>::unit(int order) {
  Laurent u(order);
  u.coeffs_[0] = ScalarTraits<S>::one();
  return u;
}

template <class S>
Laurent<S> Laurent<S>::monomial(int power, int order, const S& c) {
  if (power < 0) throw PreconditionViolation("Laurent::monomial: negative power");
  Laurent m(order);
  if (power <= order) m.coeffs_[static_cast<std::size_t>(power)] = c;
  return m;
}

template <class S>
const S& Laurent<S>::at(int k) const {
  if (k < 0 || k > order()) {
    throw TruncationExceeded("Laurent: coefficient " + std::to_string(k) +
                             " requested from a series of order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

template <class S>
S& Laurent<S>::at(int k) {
  return const_cast<S&>(std::as_const(*this).at(k));
}

template <class S>
Laurent<S> Laurent<S>::truncated(int order) const {
  if (order > this->order()) {
    throw TruncationExceeded("Laurent::truncated: cannot extend order " +
                             std::to_string(this->order()) + " to " + std::to_string(order));
  }
  return Laurent(std::vector<S>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

template <class S>
bool Laurent<S>::is_zero() const {
  return leading_index() < 0;
}

template <class S>
int Laurent<S>::leading_index() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!ScalarTraits<S>::is_zero(coeffs_[k])) return static_cast<int>(k);
  }
  return -1;
}

template <class S>
Laurent<S>& Laurent<S>::operator+=(const Laurent& o) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

template <class S>
Laurent<S>& Laurent<S>::operator-=(const Laurent& o) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

template <class S>
Laurent<S>& Laurent<S>::operator*=(const S& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

template <class S>
Laurent<S> linear_combine(const S& a, const Laurent<S>& f, const S& b, const Laurent<S>& g) {
  const int n = std::min(f.order(), g.order());
  Laurent<S> out(n);
  for (int k = 0; k <= n; ++k) out[k] = a * f[k] + b * g[k];
  return out;
}

template <class S>
Laurent<S> multiply(const Laurent<S>& f, const Laurent<S>& g) {
  const int n = std::min(f.order(), g.order());
  const int lf = f.leading_index();
  const int lg = g.leading_index();
  Laurent<S> out(n);
  if (lf < 0 || lg < 0) return out;
  S term;
  for (int k = lf + lg; k <= n; ++k) {
    S acc = ScalarTraits<S>::zero();
    for (int i = lf; i <= k - lg; ++i) {
      if (ScalarTraits<S>::is_zero(f[i]) || ScalarTraits<S>::is_zero(g[k - i])) continue;
      term = f[i];
      term *= g[k - i];
      acc += term;
    }
    out[k] = std::move(acc);
  }
  return out;
}

template <class S>
Laurent<S> power(const Laurent<S>& f, int m) {
  if (m < 0) throw PreconditionViolation("power: negative exponent");
  Laurent<S> result = Laurent<S>::unit(f.order());
  Laurent<S> base = f;
  while (m > 0) {
    if (m & 1) result = multiply(result, base);
    m >>= 1;
    if (m > 0) base = multiply(base, base);
  }
  return result;
}

template <class S>
Laurent<S> shift_down(const Laurent<S>& f, int m) {
  if (m < 0) throw PreconditionViolation("shift_down: negative shift");
  Laurent<S> out(f.order());
  for (int k = m; k <= f.order(); ++k) out[k] = f[k - m];
  return out;
}

template <class S>
Laurent<S> multiply_by_z(const Laurent<S>& f) {
  if (!ScalarTraits<S>::is_zero(f[0])) {
    throw PreconditionViolation("multiply_by_z: series has a constant term");
  }
  if (f.order() < 1) throw TruncationExceeded("multiply_by_z: order-0 series");
  Laurent<S> out(f.order() - 1);
  for (int k = 0; k < f.order(); ++k) out[k] = f[k + 1];
  return out;
}

template <class S>
Laurent<S> resolvent_reciprocal(const Laurent<S>& d) {
  // r = 1/(z - d) satisfies z r = 1 + d r, i.e. [r]_{k+1} = [d r]_k with [r]_0 = 0.
  const int n = d.order() + 1;
  Laurent<S> r(n);
  r[1] = ScalarTraits<S>::one();
  S term;
  for (int k = 1; k < n; ++k) {
    S acc = ScalarTraits<S>::zero();
    for (int i = 0; i <= k - 1; ++i) {
      if (ScalarTraits<S>::is_zero(d[i])) continue;
      term = d[i];
      term *= r[k - i];
      acc += term;
    }
    r[k + 1] = std::move(acc);
  }
  return r;
}

template <class S>
Complex evaluate(const Laurent<S>& f, Complex z) {
  const Complex w = 1.0 / z;
  Complex acc{};
  for (int k = f.order(); k >= 0; --k) acc = acc * w + ScalarTraits<S>::to_complex(f[k]);
  return acc;
}

template <class S>
double max_magnitude(const Laurent<S>& f) {
  double m = 0.0;
  for (const auto& c : f.coefficients()) m = std::max(m, ScalarTraits<S>::magnitude(c));
  return m;
}

#define BHM_INSTANTIATE(S)                                                              \
  template class Laurent<S>;                                                            \
  template Laurent<S> linear_combine(const S&, const Laurent<S>&, const S&,             \
                                     const Laurent<S>&);                                \
  template Laurent<S> multiply(const Laurent<S>&, const Laurent<S>&);                   \
  template Laurent<S> power(const Laurent<S>&, int);                                    \
  template Laurent<S> resolvent_reciprocal(const Laurent<S>&);                          \
  template Laurent<S> shift_down(const Laurent<S>&, int);                               \
  template Laurent<S> multiply_by_z(const Laurent<S>&);                                 \
  template Complex evaluate(const Laurent<S>&, Complex);                                \
  template double max_magnitude(const Laurent<S>&);

BHM_INSTANTIATE(Complex)
BHM_INSTANTIATE(ExactComplex)

#undef BHM_INSTANTIATE

}  // namespace bhm
