#include <gtest/gtest.h>

#include <random>

#include "bhm/errors.hpp"
#include "bhm/two_sided.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace bhm;
using namespace testing_helpers;

namespace {

TwoSidedWindow<E> random_window(std::mt19937& g, int p, int half) {
  return TwoSidedWindow<E>(p, half, as<E>(random_ints(g, std::vector<int>(p + 1, 2 * half + 1))));
}

}  // namespace

TEST(TwoSided, WindowAccessAndTranslation) {
  std::mt19937 g(21);
  const auto w = random_window(g, 2, 5);
  EXPECT_TRUE(w.contains(-5));
  EXPECT_FALSE(w.contains(6));
  EXPECT_THROW(w.at(0, 6), InsufficientWindow);
  const auto t = w.translated(2);
  EXPECT_EQ(t.half_width(), 3);
  for (int n = -3; n <= 3; ++n)
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(t.at(k, n), w.at(k, n + 2));
}

TEST(TwoSided, OneSidedRestrictions) {
  std::mt19937 g(22);
  const int p = 2, half = 9, r = 1;
  const auto w = random_window(g, p, half);
  const auto plus = extract_one_sided(w, r, Side::plus);
  const auto minus = extract_one_sided(w, r, Side::minus);
  EXPECT_EQ(plus.length(), one_sided_length(p, half, r, Side::plus));
  EXPECT_EQ(minus.length(), one_sided_length(p, half, r, Side::minus));
  EXPECT_EQ(plus.length(), half - r);
  EXPECT_EQ(minus.length(), r + half - p);
  for (int k = 0; k <= p; ++k) {
    for (int n = 1; n <= plus.length(); ++n) EXPECT_EQ(plus.at(k, n), w.at(k, n + r));
    for (int n = 1; n <= minus.length(); ++n) EXPECT_EQ(minus.at(k, n), w.at(k, r - n - k));
  }
}

TEST(TwoSided, WSeriesCoefficientsAreCentralPowerEntries) {
  std::mt19937 g(23);
  const int s_max = 8;
  for (int p = 1; p <= 2; ++p) {
    int half = 0;
    for (int j = -3; j <= 3; ++j) half = std::max(half, central_check_half_width(p, j, s_max));
    const auto w = random_window(g, p, half);
    const auto dense = central_dense(w, -half, half);
    std::vector<oracle::Matrix> pw{oracle::power(dense, 0)};
    for (int s = 1; s <= s_max; ++s) pw.push_back(oracle::multiply(pw.back(), dense));
    for (int j = -3; j <= 3; ++j) {
      const auto series = w_series(w, j, s_max);
      const auto entries = central_power_entries(w, j, s_max);
      for (int s = 0; s <= s_max; ++s) {
        EXPECT_EQ(q_of(series[s + 1]), pw[s][j + half][j + half]) << "p=" << p << " j=" << j << " s=" << s;
        EXPECT_EQ(q_of(entries[s]), pw[s][j + half][j + half]);
      }
      for (bool b : central_coefficient_check(w, j, s_max)) EXPECT_TRUE(b);
    }
  }
}

TEST(TwoSided, ConstantDiagonalGivesGeometricW) {
  const int half = w_series_half_width(1, 0, 6);
  TwoSidedWindow<E> w(1, half);
  for (int n = -half; n <= half; ++n) {
    w.set(0, n, E(Rational(1, 2)));
    w.set(1, n, E());
  }
  const auto ws = w_series(w, 0, 6);
  E pw(1L);
  for (int k = 1; k <= 7; ++k) {
    EXPECT_EQ(ws[k], pw);
    pw *= E(Rational(1, 2));
  }
}

TEST(TwoSided, TranslationMovesTheSite) {
  std::mt19937 g(24);
  const auto w = random_window(g, 2, w_series_half_width(2, 2, 5) + 2);
  EXPECT_EQ(w_series(w.translated(2), 0, 5), w_series(w, 2, 5));
}

TEST(TwoSided, InsufficientWindowIsReported) {
  std::mt19937 g(25);
  const auto w = random_window(g, 2, w_series_half_width(2, 0, 5) - 1);
  EXPECT_THROW(w_series(w, 0, 5), InsufficientWindow);
}

TEST(TwoSided, CentralTruncationLayout) {
  std::mt19937 g(26);
  const auto w = random_window(g, 2, 6);
  const auto b = central_truncation(w, -2, 3);
  const auto want = central_dense(w, -2, 3);
  ASSERT_EQ(b.size(), 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(q_of(b.entry(i + 1, j + 1)), want[i][j]);
}

TEST(TwoSided, VanishingOrdersHoldBothParities) {
  std::mt19937 g(27);
  for (int p = 1; p <= 2; ++p)
    for (int n = 1; n <= 5; ++n)
      for (Parity parity : {Parity::odd, Parity::even}) {
        const auto w = random_window(g, p, vanishing_half_width(p, n, parity));
        const auto rep = vanishing_order_suite(w, n, parity);
        EXPECT_TRUE(rep.passed()) << "p=" << p << " n=" << n;
        EXPECT_FALSE(rep.checks.empty());
      }
}

TEST(TwoSided, W0ExpansionMatchesWSeries) {
  std::mt19937 g(28);
  for (int p = 1; p <= 3; ++p) {
    const auto w = random_window(g, p, w_series_half_width(p, 0, 6));
    for (int r = 0; r <= 6; ++r) EXPECT_EQ(w0_multinomial_expansion(w, r, r), w_series(w, 0, r)) << r;
  }
}
