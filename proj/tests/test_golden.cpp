#include <cmath>
#include <fstream>

#include <gtest/gtest.h>

#include "tempered/golden.hpp"

using namespace tempered;

TEST(Golden, FixtureMatches) {
  const auto records = load_golden(TEMPERED_GOLDEN_PATH);
  ASSERT_GT(records.size(), 40u);
  const auto diffs = compare_golden(records);
  for (const auto& d : diffs)
    ADD_FAILURE() << "record " << d.index << " (" << d.record.op << ") diff " << d.diff << " tol " << d.record.abs_tol
                  << " " << d.message;
}

TEST(Golden, FixtureCoversRegistry) {
  const auto records = load_golden(TEMPERED_GOLDEN_PATH);
  for (const auto& op : golden_ops()) {
    bool seen = false;
    for (const auto& r : records) seen = seen || r.op == op;
    EXPECT_TRUE(seen) << op;
  }
}

TEST(Golden, TamperedValueIsReported) {
  auto records = load_golden(TEMPERED_GOLDEN_PATH);
  records[3].value_re += 1e-3;
  const auto diffs = compare_golden(records);
  ASSERT_EQ(diffs.size(), 1u);
  EXPECT_EQ(diffs[0].index, 3u);
  EXPECT_NEAR(diffs[0].diff, 1e-3, 1e-6);
}

TEST(Golden, EvaluationFailureIsADiff) {
  const auto records = parse_golden(R"([{"op": "li_eval", "s_re": 0.5, "x": 9.0, "value_re": 0, "abs_tol": 1e-12}])");
  const auto diffs = compare_golden(records);
  ASSERT_EQ(diffs.size(), 1u);
  EXPECT_FALSE(diffs[0].message.empty());
  EXPECT_TRUE(std::isnan(diffs[0].diff));
}

TEST(Golden, RoundTrip) {
  const auto records = load_golden(TEMPERED_GOLDEN_PATH);
  const auto again = parse_golden(golden_document(records));
  ASSERT_EQ(again.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(again[i].op, records[i].op);
    EXPECT_EQ(again[i].s_re, records[i].s_re);
    EXPECT_EQ(again[i].x, records[i].x);
    EXPECT_EQ(again[i].side, records[i].side);
    EXPECT_EQ(again[i].extra, records[i].extra);
    EXPECT_EQ(again[i].value_re, records[i].value_re);
    EXPECT_EQ(again[i].value_im, records[i].value_im);
    EXPECT_EQ(again[i].abs_tol, records[i].abs_tol);
  }
}

TEST(Golden, BareArrayAndDefaults) {
  const auto r = parse_golden(R"([{"op": "zeta", "s_re": 2, "value_re": 1.6449340668482264, "abs_tol": 1e-14}])");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].side, "principal");
  EXPECT_EQ(r[0].s_im, 0.0);
  EXPECT_TRUE(compare_golden(r).empty());
}

TEST(Golden, ExtrasDriveTestFunction) {
  GoldenRecord r;
  r.op = "pair_gamma_plus";
  r.extra = {{"mu", 0.5}, {"sigma", 0.8}, {"c0", 0.0}, {"c1", 1.0}};
  r.s_re = 0.0;
  // gamma_+^0 = delta: f(0) = 0 * exp(...)
  EXPECT_NEAR(evaluate(r).real(), 0.0, 1e-15);
  r.s_re = -1.0;
  // -f'(0) = -exp(-mu^2 / (2 sigma^2))
  EXPECT_NEAR(evaluate(r).real(), -std::exp(-0.25 / 1.28), 1e-14);
}

TEST(Golden, MalformedInput) {
  EXPECT_THROW(parse_golden("not json"), golden_format_error);
  EXPECT_THROW(parse_golden(R"({"values": []})"), golden_format_error);
  EXPECT_THROW(parse_golden(R"([{"op": "nope", "value_re": 0, "abs_tol": 1}])"), golden_format_error);
  EXPECT_THROW(parse_golden(R"([{"op": "zeta", "abs_tol": 1}])"), golden_format_error);
  EXPECT_THROW(parse_golden(R"([{"op": "zeta", "value_re": 1, "abs_tol": 0}])"), golden_format_error);
  EXPECT_THROW(load_golden("/nonexistent/golden.json"), std::ios_base::failure);
  GoldenRecord r;
  r.op = "pair_eta";
  r.side = "above";
  EXPECT_THROW(evaluate(r), golden_format_error);
  r.op = "lambda_i";
  r.s_re = 2.5;
  EXPECT_THROW(evaluate(r), golden_format_error);
}

TEST(Golden, JsonNumbers) {
  EXPECT_EQ(json_number(0.1), "0.10000000000000001");
  EXPECT_EQ(json_number(NAN), "null");
  EXPECT_EQ(json_string("a\"b"), "\"a\\\"b\"");
}
