#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bhm/config.hpp"
#include "bhm/errors.hpp"
#include "bhm/report.hpp"

using namespace bhm;

namespace {

const char* kConfig = R"({
  "ensemble": {"p": 2, "seed": 99, "mus": [
    {"type": "uniform", "lo": "-1", "hi": "1"},
    {"type": "atoms", "values": ["-1", [0, 1]], "probs": ["1/2", "1/2"]},
    {"type": "constant", "value": 0.25, "bound": 1}
  ]},
  "n_values": [10, 20],
  "s_max": 4,
  "trials_lhs": 100,
  "trials_rhs": 50,
  "z_eval": [40, 1]
})";

}  // namespace

TEST(Config, ParsesAndFillsDefaults) {
  const auto c = parse_config(kConfig);
  EXPECT_EQ(c.ensemble.p, 2);
  EXPECT_EQ(c.ensemble.seed, 99u);
  EXPECT_EQ(c.n_values, (std::vector<int>{10, 20}));
  EXPECT_EQ(c.laurent_order, 6);
  EXPECT_EQ(c.tolerance_sigmas, 3.0);
  EXPECT_EQ(c.evaluation_point(), Complex(40, 1));
  EXPECT_DOUBLE_EQ(c.ensemble.mus[2].bound(), 1.0);
  EXPECT_DOUBLE_EQ(c.norm_bound(), 2.0 * 4.0);
}

TEST(Config, RoundTripsThroughCanonicalForm) {
  const auto c = parse_config(kConfig);
  const auto text = serialize_config(c);
  const auto again = parse_config(text);
  EXPECT_EQ(serialize_config(again), text);
  EXPECT_EQ(config_hash(again), config_hash(c));
  auto d = c;
  d.ensemble.seed = 100;
  EXPECT_NE(config_hash(d), config_hash(c));
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(parse_config(R"({"ensemble": {"p": 0, "mus": [{"type": "constant", "value": 1}]}, "extra": 1})"),
               ConfigError);
  EXPECT_THROW(parse_config(R"({"ensemble": {"p": 1, "bogus": 2, "mus": []}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"ensemble": {"p": 1, "mus": [{"type": "constant", "value": 1, "lo": 0},
                                {"type": "constant", "value": 1}]}})"),
               ConfigError);
  EXPECT_THROW(parse_config(R"({"ensemble": {"p": 1, "mus": [{"type": "poisson"}, {"type": "constant", "value": 1}]}})"),
               ConfigError);
  EXPECT_THROW(parse_config("not json"), ConfigError);
  EXPECT_THROW(parse_config(R"({"ensemble": {"p": 1, "mus": [{"type": "constant", "value": "1/0"},
                                {"type": "constant", "value": 1}]}})"),
               ConfigError);
}

TEST(Config, Invariants) {
  auto c = parse_config(kConfig);
  c.laurent_order = c.s_max;
  EXPECT_THROW(c.validate(false), ConfigError);
  c = parse_config(kConfig);
  c.z_eval = Complex(10, 0);
  EXPECT_NO_THROW(c.validate(false));
  EXPECT_THROW(c.validate(true), ConfigError);
  c.z_eval.reset();
  EXPECT_EQ(c.evaluation_point(), Complex(3.0 * c.norm_bound(), 0.0));
  EXPECT_NO_THROW(c.validate(true));
}

TEST(Report, JudgeUsesCombinedStandardError) {
  EXPECT_EQ(judge({1.0, 0}, 0.3, {0.0, 0}, 0.4, 2.0, 0.0), Verdict::pass);
  EXPECT_EQ(judge({1.0, 0}, 0.3, {0.0, 0}, 0.4, 1.9, 0.0), Verdict::fail);
  EXPECT_EQ(judge({1.0, 0}, 0.0, {1.0, 0}, 0.0, 3.0, 0.0), Verdict::pass);
  EXPECT_EQ(judge({1.0, 0}, 0.0, {1.0 + 1e-15, 0}, 0.0, 3.0, 0.0), Verdict::fail);
  EXPECT_EQ(judge({1.0, 0}, 0.0, {1.0 + 1e-15, 0}, 0.0, 3.0, 1e-14), Verdict::pass);
}

TEST(Report, JsonRoundTrip) {
  ExperimentReport r;
  r.name = "compare";
  r.seed = 18446744073709551615ull;
  r.config_hash = 0x0123456789abcdefull;
  r.metadata["n_max"] = "200";
  r.metadata["quote"] = "a \"b\"\n";
  r.rows.push_back({"moments", "s=1", {0.1, -2.5e-300}, 1e-3, {1.0 / 3.0, 0.0}, 0.0, 1e-12, Verdict::pass});
  r.rows.push_back({"pointwise", "z=18,0", {std::numeric_limits<double>::quiet_NaN(), 0}, 0, {}, 0, 0,
                    Verdict::inconclusive});
  ExperimentReport s = r;
  s.name = "gsuite";
  s.runtime_seconds = 1.25;
  s.rows.resize(1);
  const auto text = to_json({r, s});
  const auto back = reports_from_json(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1], s);
  EXPECT_EQ(back[0].metadata, r.metadata);
  EXPECT_EQ(back[0].rows[0], r.rows[0]);
  EXPECT_TRUE(std::isnan(back[0].rows[1].lhs.real()));
  EXPECT_EQ(to_json(back), text);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(s.passed());
}

TEST(Report, CsvHasOneRowPerComparison) {
  ExperimentReport r;
  r.name = "invariance";
  r.rows.push_back({"invariance", "d=(1,0)", {0.5, 0}, 0.1, {0.25, 0}, 0.2, 0.0, Verdict::fail});
  const auto csv = to_csv({r});
  EXPECT_EQ(csv,
            "experiment,key,estimate_lhs,se_lhs,estimate_rhs,se_rhs,verdict,estimate_lhs_im,estimate_rhs_im\n"
            "invariance,\"d=(1,0)\",0.5,0.10000000000000001,0.25,0.20000000000000001,fail,0,0\n");
}

TEST(Report, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(verdict_from_string(to_string(Verdict::inconclusive)), Verdict::inconclusive);
  EXPECT_THROW(verdict_from_string("maybe"), std::exception);
}
