#include <gtest/gtest.h>

#include <random>

#include "bhm/banded.hpp"
#include "bhm/errors.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace bhm;
using namespace testing_helpers;

namespace {

std::vector<oracle::Q> coeffs_q(const Polynomial<E>& p) {
  std::vector<oracle::Q> out;
  for (const auto& c : p.coefficients()) out.push_back(c.real());
  return out;
}

oracle::Matrix block(const oracle::Matrix& a, int first, int size) {
  oracle::Matrix b(size, std::vector<oracle::Q>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) b[i][j] = a[first + i][first + j];
  return b;
}

}  // namespace

TEST(Banded, DenseLayoutMatchesOracle) {
  std::mt19937 g(1);
  const auto ints = random_ints(g, matrix_lengths(6, 2));
  const BandedHessenberg<E> b(6, 2, as<E>(ints));
  const auto want = oracle::hessenberg(6, as_q(ints));
  const auto dense = b.dense();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      EXPECT_EQ(q_of(dense[i][j]), want[i][j]);
      EXPECT_EQ(q_of(b.entry(i + 1, j + 1)), want[i][j]);
    }
}

TEST(Banded, RejectsWrongDiagonalLengths) {
  std::vector<std::vector<E>> d{{E(1L), E(2L)}, {E(1L), E(1L)}};
  EXPECT_THROW(BandedHessenberg<E>(2, 1, d), PreconditionViolation);
}

TEST(Banded, CharacteristicPolynomialAndMinorsMatchDeterminants) {
  std::mt19937 g(2);
  for (int p = 0; p <= 3; ++p)
    for (int n = 1; n <= 7; ++n) {
      const auto ints = random_ints(g, matrix_lengths(n, p));
      const auto fam = char_poly_family(BandedHessenberg<E>(n, p, as<E>(ints)));
      const auto a = oracle::hessenberg(n, as_q(ints));
      EXPECT_EQ(coeffs_q(fam.q), oracle::char_poly(a)) << "p=" << p << " n=" << n;
      for (int l = 1; l < n; ++l) {
        EXPECT_EQ(coeffs_q(fam.leading(l)), oracle::char_poly(block(a, 0, l)));
        EXPECT_EQ(coeffs_q(fam.trailing(l)), oracle::char_poly(block(a, n - l, l)));
      }
      EXPECT_TRUE(fam.trailing(-1).is_zero());
      EXPECT_EQ(fam.trailing(n), fam.q);
      EXPECT_THROW(fam.leading(n + 1), PreconditionViolation);
    }
}

TEST(Banded, DerivativeAndRowExpansionIdentitiesHold) {
  std::mt19937 g(3);
  for (int p = 1; p <= 3; ++p)
    for (int n = 1; n <= 9; ++n) {
      const BandedHessenberg<E> b(n, p, as<E>(random_ints(g, matrix_lengths(n, p))));
      const auto fam = char_poly_family(b);
      EXPECT_TRUE(derivative_identity_residual(fam).is_zero());
      for (int j = 1; j <= n; ++j) EXPECT_TRUE(row_expansion_residual(b, fam, j).is_zero()) << j;
    }
}

TEST(Banded, TracePowersMatchDensePowers) {
  std::mt19937 g(4);
  for (int p = 0; p <= 3; ++p)
    for (int n : {1, 2, 5, 9}) {
      const auto ints = random_ints(g, matrix_lengths(n, p));
      const auto tr = trace_powers(BandedHessenberg<E>(n, p, as<E>(ints)), 7);
      const auto a = oracle::hessenberg(n, as_q(ints));
      ASSERT_EQ(tr.size(), 8u);
      for (int s = 0; s <= 7; ++s) EXPECT_EQ(q_of(tr[s]), oracle::trace(oracle::power(a, s)));
    }
}

TEST(Banded, PowerInnerProductIsTheOperatorValue) {
  std::mt19937 g(5);
  const int len = 40;
  for (int p = 1; p <= 3; ++p) {
    const auto ints = random_ints(g, std::vector<int>(p + 1, len));
    const DiagonalSequences<E> seqs(p, as<E>(ints));
    const auto a = oracle::hessenberg(len, as_q(ints));
    for (int s = 0; s <= 6; ++s) {
      const auto pw = oracle::power(a, s);
      for (int j = 1; j <= p + 1; ++j) EXPECT_EQ(q_of(power_inner_product(seqs, s, j)), pw[0][j - 1]);
    }
    const auto rows = first_row_powers(seqs, 5, locality_window(5, p, p));
    for (int s = 0; s <= 5; ++s)
      for (int j = 1; j <= p; ++j) EXPECT_EQ(q_of(rows[s][j - 1]), oracle::power(a, s)[0][j - 1]);
  }
}

TEST(Banded, PowerInnerProductNeedsTheLocalityWindow) {
  const std::vector<E> vals{E(1L), E(2L)};
  const auto seqs = DiagonalSequences<E>::constant(vals, 5);
  EXPECT_THROW(power_inner_product(seqs, 4, 1), InsufficientWindow);
  EXPECT_NO_THROW(power_inner_product(seqs, 3, 1));
}

TEST(Banded, ResolventEntriesAgreeWithCramer) {
  std::mt19937 g(6);
  for (int p = 1; p <= 2; ++p)
    for (int n = 2; n <= 6; ++n) {
      const auto ints = random_ints(g, matrix_lengths(n, p));
      const BandedHessenberg<E> b(n, p, as<E>(ints));
      const auto fam = char_poly_family(b);
      const long z = 17;
      oracle::Matrix m = oracle::hessenberg(n, as_q(ints));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = (i == j ? oracle::Q(z) : oracle::Q(0)) - m[i][j];
      const oracle::Q det = oracle::determinant(m);
      auto inverse = [&](int i, int j) {  // (m^{-1})(i, j), 1-based
        oracle::Matrix minor;
        for (int r = 0; r < n; ++r) {
          if (r == j - 1) continue;
          std::vector<oracle::Q> row;
          for (int c = 0; c < n; ++c)
            if (c != i - 1) row.push_back(m[r][c]);
          minor.push_back(row);
        }
        oracle::Q v = oracle::determinant(minor) / det;
        return ((i + j) % 2) ? oracle::Q(-v) : v;
      };
      for (int k = 1; k <= n; ++k) {
        EXPECT_EQ(q_of(resolvent_entry_poly(fam, E(z), k, k)), inverse(k, k));
        EXPECT_EQ(q_of(resolvent_entry_poly(fam, E(z), 1, k)), inverse(1, k));
        EXPECT_EQ(q_of(resolvent_entry_dense_oracle(b, E(z), 1, k)), inverse(1, k));
      }
      EXPECT_THROW(resolvent_entry_poly(fam, E(z), 2, 1), PreconditionViolation);
    }
}

TEST(Banded, FloatResolventMatchesDenseOracle) {
  std::mt19937 g(7);
  const BandedHessenberg<Complex> b(8, 2, as<Complex>(random_ints(g, matrix_lengths(8, 2))));
  const auto fam = char_poly_family(b);
  const Complex z(30.0, 7.0);
  for (int k = 1; k <= 8; ++k) {
    const Complex a = resolvent_entry_poly(fam, z, k, k);
    const Complex d = resolvent_entry_dense_oracle(b, z, k, k);
    EXPECT_LE(std::abs(a - d), 1e-12 * std::abs(d));
  }
}

TEST(Banded, EigenvalueHitIsReported) {
  const BandedHessenberg<E> b(1, 0, {{E(2L)}});
  const auto fam = char_poly_family(b);
  EXPECT_THROW(resolvent_entry_poly(fam, E(2L), 1, 1), EigenvalueHit);
  EXPECT_THROW(resolvent_entry_dense_oracle(b, E(2L), 1, 1), EigenvalueHit);
}
