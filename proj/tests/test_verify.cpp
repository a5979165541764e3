#include <gtest/gtest.h>

#include <algorithm>

#include "qspace/error.hpp"
#include "qspace/verify.hpp"

using namespace qspace;

TEST(Verify, ReportIsSortedAndComplete) {
  const Report r = run_suite("grassmann", SuiteOptions{});
  ASSERT_FALSE(r.checks.empty());
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; }));
  for (const Check& c : r.checks) {
    EXPECT_FALSE(c.paper_ref.empty()) << c.id;
    EXPECT_FALSE(c.anchor.empty()) << c.id;
  }
  EXPECT_TRUE(r.all_pass());
}

TEST(Verify, SpotValueCheckIsPresent) {
  const Report r = run_suite("grassmann", SuiteOptions{});
  auto it = std::find_if(r.checks.begin(), r.checks.end(),
                         [](const Check& c) { return c.id == "grassmann.quantum_plane.spot"; });
  ASSERT_NE(it, r.checks.end());
  EXPECT_EQ(it->status, CheckStatus::exact_pass);
  EXPECT_EQ(it->witness.value_or(""), "q^(-1/2)");
}

TEST(Verify, JsonSchema) {
  const Json j = run_suite("phasespace", SuiteOptions{1.7, 5, 2}).to_json();
  EXPECT_EQ(j.at("suite"), "phasespace");
  EXPECT_EQ(j.at("q"), 1.7);
  EXPECT_EQ(j.at("seed"), 5);
  for (const auto& c : j.at("checks")) {
    for (const char* key : {"id", "paper_ref", "anchor", "status"}) EXPECT_TRUE(c.contains(key)) << key;
    EXPECT_TRUE(c.at("status") == "exact-pass" || c.at("status") == "numeric-pass");
  }
}

TEST(Verify, SameSeedSameBytes) {
  const SuiteOptions opt{1.3, 99, 2};
  EXPECT_EQ(run_suite("lattice", opt).to_json().dump(), run_suite("lattice", opt).to_json().dump());
}

TEST(Verify, NumericChecksCarryTolerance) {
  const Report r = run_suite("lattice", SuiteOptions{});
  int numeric = 0;
  for (const Check& c : r.checks)
    if (c.status == CheckStatus::numeric_pass) {
      ++numeric;
      EXPECT_TRUE(c.tolerance.has_value()) << c.id;
    }
  EXPECT_GT(numeric, 0);
}

TEST(Verify, FindingDoesNotFailTheReport) {
  Report r;
  r.checks.push_back({"a", "ref", "x = x", CheckStatus::finding, 1e-10, "0.5"});
  EXPECT_TRUE(r.all_pass());
  r.checks.push_back({"b", "ref", "x = x", CheckStatus::fail, std::nullopt, std::nullopt});
  EXPECT_FALSE(r.all_pass());
}

TEST(Verify, BadArgumentsAreErrors) {
  EXPECT_THROW(run_suite("topology", SuiteOptions{}), Error);
  EXPECT_THROW(run_suite("lattice", SuiteOptions{1.0, 1, 2}), Error);
  EXPECT_THROW(run_suite("lattice", SuiteOptions{1.3, 1, 0}), Error);
  EXPECT_THROW(run_group("nothing", SuiteOptions{}), Error);
}
