#pragma once

#include <span>
#include <vector>

#include "bhm/banded.hpp"
#include "bhm/combinatorics.hpp"
#include "bhm/laurent.hpp"
#include "bhm/polynomial.hpp"

namespace bhm {

/// Resolvent functions phi_j = <(zI - H)^{-1} e_j, e_1>, 1 <= j <= p, as series to order N.
template <class S>
struct WeylSystem {
  int p = 0;
  int order = 0;
  /// phi[0] is the unit series (phi_0 = 1); phi[j] is phi_j.
  std::vector<Laurent<S>> phi;

  const Laurent<S>& operator()(int j) const { return phi.at(static_cast<std::size_t>(j)); }
};

/// Smallest window for which weyl_series(seqs, N) is exact.
constexpr int weyl_window(int p, int order) { return p * order + p; }

/// [phi_j]_{s+1} = <H^s e_j, e_1> for 0 <= s <= N-1.
template <class S>
WeylSystem<S> weyl_series(const DiagonalSequences<S>& seqs, int order);

/// q_n = det(zI - H_n), q_{n,j} = det((zI - H_n)^{[j]}), with the Kalyagin multi-index.
template <class S>
struct HermitePadePair {
  int n = 0;
  Polynomial<S> q;
  std::vector<Polynomial<S>> q_sub;  // q_{n,1} .. q_{n,p}
  std::vector<int> multi_index;      // n_1 .. n_p
};

/// n_j = floor((n - j)/p) + 1.
int contact_index(int n, int j, int p);

template <class S>
HermitePadePair<S> hermite_pade_pair(const DiagonalSequences<S>& seqs, int n);

/// Coefficients of q_n phi_j - q_{n,j} at z^{n}, z^{n-1}, ..., z^{-lowest}.
template <class S>
std::vector<S> contact_residual(const HermitePadePair<S>& pair, const WeylSystem<S>& w, int j,
                                int lowest);

/// Per j: does q_n phi_j - q_{n,j} vanish at z^{n} .. z^{-n_j}?
template <class S>
std::vector<bool> contact_order_check(const HermitePadePair<S>& pair, const WeylSystem<S>& w);

/// [q_{n,j}/q_n] as a series at infinity to `order`.
template <class S>
Laurent<S> ratio_series(const HermitePadePair<S>& pair, int j, int order);

/// Residuals of (z - a_1^0 - sum_k a_1^k phi_{1,k}) phi_1 - 1 and phi_j - phi_{1,j-1} phi_1.
template <class S>
std::vector<Laurent<S>> shift_relation_residuals(const WeylSystem<S>& w, const WeylSystem<S>& w1,
                                                 std::span<const S> a1);

/// prod phi_j^{r_j} minus its expansion in a_1 and the shifted system, to `order`.
template <class S>
Laurent<S> product_expansion_residual(const WeylSystem<S>& w, const WeylSystem<S>& w1,
                                      std::span<const S> a1, std::span<const int> r, int order);

/// prod_j f_j^{e_j} to `order`, skipping factors with zero exponent.
template <class S>
Laurent<S> monomial_product(std::span<const Laurent<S>> factors, std::span<const int> exponents,
                            int order);

}  // namespace bhm
