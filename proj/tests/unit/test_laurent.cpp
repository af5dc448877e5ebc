#include <gtest/gtest.h>

#include "bhm/errors.hpp"
#include "bhm/laurent.hpp"
#include "bhm/polynomial.hpp"

using namespace bhm;
using E = ExactComplex;
using LE = Laurent<E>;

namespace {

LE series(std::vector<long> c) {
  std::vector<E> v;
  for (long x : c) v.emplace_back(x);
  return LE(v);
}

}  // namespace

TEST(Laurent, CauchyProductAgainstNaiveDoubleSum) {
  const auto f = series({1, -2, 3, 0, 5, 7});
  const auto g = series({0, 4, -1, 2, 2});
  const auto h = f * g;
  ASSERT_EQ(h.order(), 4);
  for (int k = 0; k <= 4; ++k) {
    E want;
    for (int i = 0; i <= k; ++i) want += f[i] * g[k - i];
    EXPECT_EQ(h[k], want) << k;
  }
}

TEST(Laurent, TruncationIsEnforced) {
  const auto f = series({1, 2, 3});
  EXPECT_THROW(f.at(3), TruncationExceeded);
  EXPECT_EQ(f.at(2), E(3L));
  EXPECT_EQ((f + series({1, 1})).order(), 1);
}

TEST(Laurent, PowerMatchesRepeatedProduct) {
  const auto f = series({0, 1, -1, 2, 0, 3, 1});
  auto want = LE::unit(6);
  for (int m = 0; m <= 4; ++m) {
    EXPECT_EQ(power(f, m), want);
    want = want * f;
  }
  SeriesPowers<E> pw(f);
  EXPECT_EQ(pw(3), power(f, 3));
  EXPECT_EQ(pw(1), f);
}

TEST(Laurent, ResolventReciprocalInvertsZMinusD) {
  // r = 1/(z - d) means z r - d r = 1.
  const auto d = series({2, -1, 3, 1, 0, 4});
  const auto r = resolvent_reciprocal(d);
  ASSERT_EQ(r.order(), 6);
  const auto zr = multiply_by_z(r);
  const auto dr = d * r.truncated(5);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(zr[k] - dr[k], k == 0 ? E(1L) : E()) << k;
}

TEST(Laurent, ResolventOfConstantIsGeometric) {
  const E c(Rational(1, 2));
  const auto r = resolvent_reciprocal(LE::constant(c, 6));
  E pw(1L);
  for (int k = 1; k <= 7; ++k) {
    EXPECT_EQ(r[k], pw);
    pw *= c;
  }
}

TEST(Laurent, ShiftAndMultiplyByZ) {
  const auto f = series({0, 1, 2, 3});
  EXPECT_EQ(shift_down(f, 2), series({0, 0, 0, 1}));
  EXPECT_EQ(multiply_by_z(f), series({1, 2, 3}));
  EXPECT_THROW(multiply_by_z(series({1, 2})), PreconditionViolation);
}

TEST(Laurent, EvaluateSumsStoredTerms) {
  const auto f = Laurent<Complex>(std::vector<Complex>{1.0, 2.0, -4.0});
  EXPECT_NEAR(std::abs(evaluate(f, Complex(2.0, 0.0)) - Complex(1.0, 0.0)), 0.0, 1e-15);
}

TEST(Polynomial, EvaluateDerivativeAndTrim) {
  Polynomial<E> p(std::vector<E>{E(1L), E(-3L), E(0L), E(2L), E(0L)});
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.evaluate(E(2L)), E(1L - 6 + 16));
  EXPECT_EQ(p.derivative(), Polynomial<E>(std::vector<E>{E(-3L), E(0L), E(6L)}));
  EXPECT_TRUE((p - p).is_zero());
  const auto q = Polynomial<E>::linear(E(2L)) * Polynomial<E>::linear(E(-1L));
  EXPECT_EQ(q, Polynomial<E>(std::vector<E>{E(-2L), E(-1L), E(1L)}));
}

TEST(Polynomial, SeriesAtInfinityOfRationalFunction) {
  // 1/(z - 2) = sum 2^{k-1} z^{-k}
  const auto s = series_at_infinity(Polynomial<E>::one(), Polynomial<E>::linear(E(2L)), 6);
  EXPECT_EQ(s[0], E());
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(s[k], E(1L << (k - 1)));
  // z/(z^2 - 1) = z^{-1} + z^{-3} + ...
  const auto t = series_at_infinity(Polynomial<E>::monomial(1),
                                    Polynomial<E>(std::vector<E>{E(-1L), E(0L), E(1L)}), 5);
  EXPECT_EQ(t, series({0, 1, 0, 1, 0, 1}));
}
