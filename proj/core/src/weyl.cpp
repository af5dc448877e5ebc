#include "bhm/weyl.hpp"

#include <algorithm>
#include <string>

#include "bhm/errors.hpp"

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

}  // namespace

template <class S>
WeylSystem<S> weyl_series(const DiagonalSequences<S>& seqs, int order) {
  const int p = seqs.bands();
  if (order < 0) throw PreconditionViolation("weyl_series: negative order");
  const int need = weyl_window(p, order);
  if (seqs.length() < need) throw InsufficientWindow("weyl_series", need, seqs.length());

  WeylSystem<S> w;
  w.p = p;
  w.order = order;
  w.phi.push_back(Laurent<S>::unit(order));
  for (int j = 1; j <= p; ++j) w.phi.emplace_back(order);
  if (order == 0 || p == 0) return w;

  const auto rows = first_row_powers(seqs, order - 1, need);
  for (int s = 0; s < order; ++s)
    for (int j = 1; j <= p; ++j) w.phi[idx(j)][s + 1] = rows[idx(s)][idx(j - 1)];
  return w;
}

int contact_index(int n, int j, int p) {
  if (p < 1) throw PreconditionViolation("contact_index: p must be positive");
  return floor_div(n - j, p) + 1;
}

template <class S>
HermitePadePair<S> hermite_pade_pair(const DiagonalSequences<S>& seqs, int n) {
  const int p = seqs.bands();
  if (n < 0) throw PreconditionViolation("hermite_pade_pair: negative n");
  if (n > seqs.length()) throw InsufficientWindow("hermite_pade_pair", n, seqs.length());
  HermitePadePair<S> pair;
  pair.n = n;
  for (int j = 1; j <= p; ++j) pair.multi_index.push_back(contact_index(n, j, p));
  if (n == 0) {
    pair.q = Polynomial<S>::one();
    pair.q_sub.assign(idx(p), Polynomial<S>{});
    return pair;
  }
  const auto fam = char_poly_family(BandedHessenberg<S>::leading(seqs, n));
  pair.q = fam.q;
  for (int j = 1; j <= p; ++j) pair.q_sub.push_back(j <= n ? fam.trailing(n - j) : Polynomial<S>{});
  return pair;
}

template <class S>
std::vector<S> contact_residual(const HermitePadePair<S>& pair, const WeylSystem<S>& w, int j,
                                int lowest) {
  if (j < 1 || j > w.p || j > static_cast<int>(pair.q_sub.size()))
    throw PreconditionViolation("contact_residual: j out of range");
  const auto& phi = w(j);
  const auto& q = pair.q;
  const auto& qj = pair.q_sub[idx(j - 1)];
  std::vector<S> out;
  for (int e = pair.n; e >= -lowest; --e) {
    S acc = ScalarTraits<S>::zero();
    for (int i = std::max(0, e); i <= q.degree(); ++i) {
      const S& qi = q.coefficients()[idx(i)];
      if (!ScalarTraits<S>::is_zero(qi)) acc += qi * phi.at(i - e);
    }
    if (e >= 0) acc -= qj.coefficient(e);
    out.push_back(std::move(acc));
  }
  return out;
}

template <class S>
std::vector<bool> contact_order_check(const HermitePadePair<S>& pair, const WeylSystem<S>& w) {
  std::vector<bool> ok;
  const double qscale = std::max(1.0, max_magnitude(pair.q));
  for (int j = 1; j <= w.p; ++j) {
    const int nj = pair.multi_index[idx(j - 1)];
    const double scale = qscale * std::max(1.0, max_magnitude(w(j)));
    const auto res = contact_residual(pair, w, j, nj);
    ok.push_back(std::all_of(res.begin(), res.end(),
                             [&](const S& c) { return negligible(c, scale); }));
  }
  return ok;
}

template <class S>
Laurent<S> ratio_series(const HermitePadePair<S>& pair, int j, int order) {
  if (j < 1 || j > static_cast<int>(pair.q_sub.size()))
    throw PreconditionViolation("ratio_series: j out of range");
  return series_at_infinity(pair.q_sub[idx(j - 1)], pair.q, order);
}

template <class S>
std::vector<Laurent<S>> shift_relation_residuals(const WeylSystem<S>& w, const WeylSystem<S>& w1,
                                                 std::span<const S> a1) {
  if (w.p != w1.p || a1.size() != idx(w.p + 1))
    throw PreconditionViolation("shift_relation_residuals: mismatched p");
  if (w.order != w1.order) throw PreconditionViolation("shift_relation_residuals: mismatched orders");
  if (w.p == 0 || w.order == 0) return {};
  const int p = w.p;
  std::vector<Laurent<S>> out;

  Laurent<S> denom_tail = Laurent<S>::constant(a1[0], w.order);
  for (int k = 1; k <= p; ++k) denom_tail += w1(k) * a1[idx(k)];
  Laurent<S> first = multiply_by_z(w(1));
  first -= multiply(denom_tail, w(1));
  first -= Laurent<S>::unit(first.order());
  out.push_back(std::move(first));

  for (int j = 2; j <= p; ++j) out.push_back(w(j) - multiply(w1(j - 1), w(1)));
  return out;
}

template <class S>
Laurent<S> monomial_product(std::span<const Laurent<S>> factors, std::span<const int> exponents,
                            int order) {
  if (factors.size() != exponents.size())
    throw PreconditionViolation("monomial_product: length mismatch");
  Laurent<S> acc = Laurent<S>::unit(order);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (exponents[i] > 0) acc = multiply(acc, power(factors[i].truncated(order), exponents[i]));
  return acc;
}

template <class S>
Laurent<S> product_expansion_residual(const WeylSystem<S>& w, const WeylSystem<S>& w1,
                                      std::span<const S> a1, std::span<const int> r, int order) {
  const int p = w.p;
  if (w1.p != p || a1.size() != idx(p + 1) || r.size() != idx(p))
    throw PreconditionViolation("product_expansion_residual: mismatched lengths");
  if (order > w.order || order > w1.order)
    throw TruncationExceeded("product_expansion_residual: order " + std::to_string(order) +
                             " exceeds the Weyl systems");

  std::span<const Laurent<S>> phis(w.phi.data() + 1, idx(p));
  Laurent<S> residual = monomial_product(phis, r, order);

  std::vector<SeriesPowers<S>> shifted;
  for (int j = 1; j <= p; ++j) shifted.emplace_back(w1(j).truncated(order));
  int rtot = 0;
  for (int v : r) rtot += v;

  std::vector<int> e(idx(p));
  for (int n = 0; n + rtot <= order; ++n) {
    const BigInt lead = binomial_with_convention(n + rtot - 1, rtot - 1);
    if (lead == 0) continue;
    for_each_composition(n, p + 1, [&](std::span<const int> k) {
      int reach = n + rtot;
      for (int j = 1; j <= p; ++j) {
        e[idx(j - 1)] = k[idx(j)] + (j < p ? r[idx(j)] : 0);
        reach += j * e[idx(j - 1)];
      }
      if (reach > order) return;
      S c = ScalarTraits<S>::from_bigint(lead * multinomial(n, k));
      for (int j = 0; j <= p; ++j)
        if (k[idx(j)] > 0) c *= ipow(a1[idx(j)], static_cast<unsigned>(k[idx(j)]));
      if (ScalarTraits<S>::is_zero(c)) return;
      Laurent<S> term = Laurent<S>::unit(order);
      for (int j = 1; j <= p; ++j)
        if (e[idx(j - 1)] > 0) term = multiply(term, shifted[idx(j - 1)](e[idx(j - 1)]));
      residual -= shift_down(term, n + rtot) * c;
    });
  }
  return residual;
}

#define BHM_INSTANTIATE(S)                                                                    \
  template struct WeylSystem<S>;                                                              \
  template struct HermitePadePair<S>;                                                         \
  template WeylSystem<S> weyl_series(const DiagonalSequences<S>&, int);                       \
  template HermitePadePair<S> hermite_pade_pair(const DiagonalSequences<S>&, int);            \
  template std::vector<S> contact_residual(const HermitePadePair<S>&, const WeylSystem<S>&,   \
                                           int, int);                                         \
  template std::vector<bool> contact_order_check(const HermitePadePair<S>&,                   \
                                                 const WeylSystem<S>&);                       \
  template Laurent<S> ratio_series(const HermitePadePair<S>&, int, int);                      \
  template std::vector<Laurent<S>> shift_relation_residuals(                                  \
      const WeylSystem<S>&, const WeylSystem<S>&, std::span<const S>);                        \
  template Laurent<S> monomial_product(std::span<const Laurent<S>>, std::span<const int>,     \
                                       int);                                                  \
  template Laurent<S> product_expansion_residual(const WeylSystem<S>&, const WeylSystem<S>&,  \
                                                 std::span<const S>, std::span<const int>, int);

BHM_INSTANTIATE(Complex)
BHM_INSTANTIATE(ExactComplex)

#undef BHM_INSTANTIATE

}  // namespace bhm
