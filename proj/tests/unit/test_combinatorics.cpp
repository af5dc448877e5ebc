#include <gtest/gtest.h>

#include "bhm/combinatorics.hpp"
#include "bhm/errors.hpp"
#include "oracles.hpp"

using namespace bhm;

TEST(Compositions, MatchBruteForceEnumerationInOrder) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 6; ++n) {
      const auto got = compositions(n, m);
      const auto want = oracle::compositions(n, m);
      ASSERT_EQ(got.size(), want.size()) << "n=" << n << " m=" << m;
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(std::vector<int>(got[i].parts().begin(), got[i].parts().end()), want[i]);
        EXPECT_EQ(got[i].total(), n);
      }
    }
}

TEST(Compositions, CountIsStarsAndBars) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= 8; ++n) {
      long count = 0;
      for_each_composition(n, m, [&](std::span<const int>) { ++count; });
      EXPECT_EQ(mpz_class(count), binomial_with_convention(n + m - 1, m - 1));
    }
}

TEST(Compositions, EmptyCases) {
  EXPECT_EQ(compositions(0, 3).size(), 1u);
  EXPECT_THROW(compositions(2, 0), PreconditionViolation);
  EXPECT_EQ(Composition({0, 2, 1}).component(2), 2);
  EXPECT_THROW(Composition({0, 1}).component(3), PreconditionViolation);
}

TEST(Multinomial, AgreesWithFactorialRatio) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 7; ++n)
      for (const auto& k : oracle::compositions(n, m)) {
        mpz_class want = oracle::factorial(n);
        for (int x : k) want /= oracle::factorial(x);
        EXPECT_EQ(multinomial(n, std::span<const int>(k)), want);
      }
  const std::vector<int> bad{1, 1};
  EXPECT_THROW(multinomial(3, std::span<const int>(bad)), PreconditionViolation);
}

TEST(Binomial, ConventionAtMinusOne) {
  EXPECT_EQ(binomial_with_convention(-1, -1), 1);
  EXPECT_EQ(binomial_with_convention(0, -1), 0);
  EXPECT_EQ(binomial_with_convention(4, -1), 0);
  EXPECT_EQ(binomial_with_convention(5, 2), 10);
  EXPECT_EQ(binomial_with_convention(3, 5), 0);
  EXPECT_EQ(binomial_with_convention(6, 0), 1);
}

TEST(TriangleIndex, EnumeratesSlotsOnceInRowOrder) {
  for (int p = 0; p <= 4; ++p) {
    std::vector<int> seen;
    for (int l = 0; l <= p; ++l)
      for (int s = 0; s <= l; ++s) seen.push_back(flat_index(s, l));
    ASSERT_EQ(static_cast<int>(seen.size()), triangle_size(p));
    for (int i = 0; i < triangle_size(p); ++i) EXPECT_EQ(seen[i], i + 1);
  }
}

// Slot (s, l) carries a^{(l)}_{-s} phi^+_{l-s} phi^-_s, so it feeds alpha_{l-s} and beta_s.
TEST(AlphaBeta, CountSlotsByPlusAndMinusIndex) {
  for (int p = 1; p <= 3; ++p) {
    const int w = triangle_size(p);
    for (int r = 0; r <= 3; ++r)
      for (const auto& k : oracle::compositions(r, w)) {
        std::vector<int> alpha(p, 0), beta(p, 0);
        for (int l = 0; l <= p; ++l)
          for (int s = 0; s <= l; ++s) {
            const int c = k[flat_index(s, l) - 1];
            if (l - s >= 1) alpha[l - s - 1] += c;
            if (s >= 1) beta[s - 1] += c;
          }
        EXPECT_EQ(alpha_vector(std::span<const int>(k), p), alpha);
        EXPECT_EQ(beta_vector(std::span<const int>(k), p), beta);
      }
  }
}

TEST(AlphaBeta, RejectsWrongLength) {
  const std::vector<int> k{1, 0};
  EXPECT_THROW(alpha_beta_index(std::span<const int>(k), 1, 1), PreconditionViolation);
}

TEST(EtaMap, ShiftsRAndAppendsLastK) {
  const std::vector<int> r{1, 2, 3};
  const std::vector<int> k{5, 1, 0, 4};
  EXPECT_EQ(eta_map(r, k), (IndexVector{1 + 2, 0 + 3, 4}));
  const std::vector<int> r1{2};
  const std::vector<int> k1{3, 7};
  EXPECT_EQ(eta_map(r1, k1), (IndexVector{7}));
}

TEST(IndexVectors, GroupedByTotal) {
  const auto v = index_vectors_up_to(2, 2);
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v.front(), (IndexVector{0, 0}));
  int last = 0;
  for (const auto& x : v) {
    const int t = x[0] + x[1];
    EXPECT_GE(t, last);
    last = t;
  }
}
