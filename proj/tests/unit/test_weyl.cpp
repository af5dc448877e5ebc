#include <gtest/gtest.h>

#include <random>

#include "bhm/errors.hpp"
#include "bhm/weyl.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace bhm;
using namespace testing_helpers;

namespace {

DiagonalSequences<E> random_seqs(std::mt19937& g, int p, int len) {
  return DiagonalSequences<E>(p, as<E>(random_ints(g, std::vector<int>(p + 1, len))));
}

}  // namespace

TEST(Weyl, CoefficientsAreFirstRowPowerEntries) {
  std::mt19937 g(11);
  for (int p = 1; p <= 3; ++p) {
    const int order = 6;
    const int len = weyl_window(p, order) + 5;
    const auto ints = random_ints(g, std::vector<int>(p + 1, len));
    const auto w = weyl_series(DiagonalSequences<E>(p, as<E>(ints)), order);
    const auto a = oracle::hessenberg(len, as_q(ints));
    EXPECT_EQ(w(0), Laurent<E>::unit(order));
    for (int j = 1; j <= p; ++j) {
      EXPECT_EQ(q_of(w(j)[0]), 0);
      for (int s = 0; s < order; ++s) EXPECT_EQ(q_of(w(j)[s + 1]), oracle::power(a, s)[0][j - 1]);
    }
  }
}

TEST(Weyl, FreeJacobiCaseGivesCatalanNumbers) {
  // a^{(0)} = 0, a^{(1)} = 1: phi = (z - sqrt(z^2 - 4)) / 2.
  const std::vector<E> vals{E(0L), E(1L)};
  const int order = 13;
  const auto w = weyl_series(DiagonalSequences<E>::constant(vals, weyl_window(1, order)), order);
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int k = 0; k <= order; ++k) {
    const E want = (k % 2 == 1) ? E(catalan[(k - 1) / 2]) : E();
    EXPECT_EQ(w(1)[k], want) << k;
  }
}

TEST(Weyl, WindowIsChecked) {
  const std::vector<E> vals{E(1L), E(1L), E(1L)};
  EXPECT_THROW(weyl_series(DiagonalSequences<E>::constant(vals, weyl_window(2, 5) - 1), 5),
               InsufficientWindow);
}

TEST(Weyl, ContactIndex) {
  EXPECT_EQ(contact_index(5, 1, 2), 3);
  EXPECT_EQ(contact_index(5, 2, 2), 2);
  EXPECT_EQ(contact_index(1, 2, 2), 0);
  EXPECT_EQ(contact_index(7, 3, 3), 2);
}

TEST(Weyl, HermitePadeContactAndRatioAgreement) {
  std::mt19937 g(12);
  for (int p = 1; p <= 3; ++p)
    for (int n = 1; n <= 9; ++n) {
      const int order = 2 * n + 2;
      const auto seqs = random_seqs(g, p, weyl_window(p, order));
      const auto w = weyl_series(seqs, order);
      const auto pair = hermite_pade_pair(seqs, n);
      const auto ok = contact_order_check(pair, w);
      for (bool b : ok) EXPECT_TRUE(b) << "p=" << p << " n=" << n;
      for (int j = 1; j <= std::min(p, n); ++j) {
        const int nj = pair.multi_index[j - 1];
        const auto ratio = ratio_series(pair, j, order);
        for (int k = 0; k < n + nj; ++k) EXPECT_EQ(ratio[k], w(j)[k]) << "j=" << j << " k=" << k;
      }
    }
}

TEST(Weyl, ContactFailsForForeignApproximant) {
  std::mt19937 g(13);
  const auto seqs = random_seqs(g, 2, 60);
  auto other = random_seqs(g, 2, 60);
  const auto w = weyl_series(seqs, 12);
  const auto ok = contact_order_check(hermite_pade_pair(other, 8), w);
  EXPECT_NE(std::count(ok.begin(), ok.end(), true), 2);
}

TEST(Weyl, ShiftRelationsAndProductExpansionVanish) {
  std::mt19937 g(14);
  for (int p = 1; p <= 3; ++p) {
    const int order = 10;
    const auto seqs = random_seqs(g, p, weyl_window(p, order) + 1);
    const auto w = weyl_series(seqs, order);
    const auto w1 = weyl_series(seqs.shifted(1), order);
    std::vector<E> a1;
    for (int k = 0; k <= p; ++k) a1.push_back(seqs.at(k, 1));
    for (const auto& r : shift_relation_residuals(w, w1, std::span<const E>(a1))) EXPECT_TRUE(r.is_zero());
    for (const auto& r : index_vectors_up_to(p, 3))
      EXPECT_TRUE(product_expansion_residual(w, w1, std::span<const E>(a1), std::span<const int>(r), order)
                      .is_zero());
    a1[0] += E(1L);
    EXPECT_FALSE(shift_relation_residuals(w, w1, std::span<const E>(a1))[0].is_zero());
    const IndexVector r1 = [&] { IndexVector v(p, 0); v[0] = 1; return v; }();
    EXPECT_FALSE(
        product_expansion_residual(w, w1, std::span<const E>(a1), std::span<const int>(r1), order).is_zero());
  }
}

TEST(Weyl, MonomialProductSkipsZeroExponents) {
  const std::vector<Laurent<E>> f{Laurent<E>(std::vector<E>{E(0L), E(2L), E(1L)}),
                                  Laurent<E>(std::vector<E>{E(1L), E(1L), E(1L)})};
  const std::vector<int> e{2, 0};
  EXPECT_EQ(monomial_product(std::span<const Laurent<E>>(f), std::span<const int>(e), 2),
            Laurent<E>(std::vector<E>{E(0L), E(0L), E(4L)}));
}
