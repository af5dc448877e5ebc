#include <gtest/gtest.h>

#include "bhm/errors.hpp"
#include "bhm/identity_suite.hpp"

using namespace bhm;

namespace {

IdentitySuiteOptions single(std::uint64_t seed) {
  IdentitySuiteOptions o;
  o.single_seed = seed;
  return o;
}

}  // namespace

TEST(IdentitySuite, SingleSeedModePasses) {
  const auto r = run_identity_checks(single(4));
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.checks.size(), identity_check_names().size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) EXPECT_EQ(r.checks[i].check, identity_check_names()[i]);
  EXPECT_EQ(r.checks[0].cases, 3 * 12);
}

TEST(IdentitySuite, SingleSeedIsASubsetOfTheGrid) {
  auto grid = single(0);
  grid.single_seed.reset();
  grid.checks = {"polynomial.derivative"};
  grid.seeds_polynomial = 3;
  const auto full = run_identity_checks(grid);
  auto one = single(2);
  one.checks = grid.checks;
  const auto sub = run_identity_checks(one);
  EXPECT_EQ(full.checks[0].cases, 3 * sub.checks[0].cases);
  EXPECT_EQ(full.passed(), sub.passed());
}

TEST(IdentitySuite, InjectedCorruptionIsAttributed) {
  for (const auto& name : identity_check_names()) {
    if (name == "two_sided.vanishing") continue;
    auto o = single(1);
    o.inject = name;
    o.checks = {name, name == "polynomial.derivative" ? "polynomial.row_expansion" : "polynomial.derivative"};
    const auto r = run_identity_checks(o);
    ASSERT_FALSE(r.failures.empty()) << name;
    for (const auto& f : r.failures) {
      EXPECT_EQ(f.check, name);
      EXPECT_EQ(f.seed, 1u);
      EXPECT_FALSE(f.detail.empty());
    }
  }
}

TEST(IdentitySuite, InjectionReportsCarryReproducers) {
  auto o = single(0);
  o.inject = "polynomial.row_expansion";
  o.checks = {"polynomial.row_expansion"};
  o.p_max = 1;
  o.n_max = 2;
  const auto r = run_identity_checks(o);
  const auto rep = identity_report(r, o);
  EXPECT_FALSE(rep.passed());
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].verdict, Verdict::fail);
  EXPECT_EQ(rep.rows[0].lhs.real(), static_cast<double>(r.failures.size()));
  EXPECT_EQ(rep.metadata.at("failure.000000").rfind("check=polynomial.row_expansion seed=0 p=1 n=", 0), 0u);
  EXPECT_EQ(rep.metadata.at("inject"), "polynomial.row_expansion");
}

TEST(IdentitySuite, RejectsUnknownOrUnsupportedNames) {
  auto o = single(0);
  o.checks = {"no.such.check"};
  EXPECT_THROW(run_identity_checks(o), ConfigError);
  o.checks.clear();
  o.inject = "two_sided.vanishing";
  EXPECT_THROW(run_identity_checks(o), ConfigError);
}

TEST(IdentitySuite, EntriesAreSeededIntegersInRange) {
  const std::vector<int> lengths{5, 4, 3};
  const auto a = identity_entries(9, "polynomial.derivative", 2, 5, 3, lengths);
  EXPECT_EQ(a, identity_entries(9, "polynomial.derivative", 2, 5, 3, lengths));
  EXPECT_NE(a, identity_entries(9, "polynomial.derivative", 2, 5, 4, lengths));
  EXPECT_NE(a, identity_entries(9, "polynomial.row_expansion", 2, 5, 3, lengths));
  for (const auto& d : a)
    for (long x : d) {
      EXPECT_GE(x, -3);
      EXPECT_LE(x, 3);
    }
}

TEST(IdentitySuite, ThreadCountDoesNotChangeResults) {
  auto o = single(5);
  o.inject = "weyl.shift_relations";
  o.checks = {"weyl.shift_relations", "two_sided.w0_expansion"};
  const auto a = run_identity_checks(o);
  o.threads = 4;
  const auto b = run_identity_checks(o);
  EXPECT_EQ(a.failures, b.failures);
}
