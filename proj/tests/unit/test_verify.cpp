#include <gtest/gtest.h>

#include "focal/errors.hpp"
#include "focal/verify.hpp"
#include "oracles.hpp"

using namespace focal;
using namespace focal::oracle;

namespace {

VerifyReport run(const std::string& suite, const std::string& name) {
  return run_suite(suite, Curve(load_fixture(name)), name);
}

void expect_pass(const VerifyReport& r) {
  EXPECT_FALSE(r.assertions.empty());
  for (const auto& a : r.assertions) EXPECT_TRUE(a.pass) << r.suite << ' ' << a.name << " residual " << a.residual;
}

}  // namespace

TEST(Verify, SuiteNames) {
  for (const char* s : {"prop2_1", "thm3_4", "prop4_1", "thm4_3", "s21", "s31", "all"}) EXPECT_TRUE(is_suite(s));
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_THROW(run("nope", "r31_lightlike.curve"), UsageError);
}

TEST(Verify, WrongAmbientIsAUsageError) {
  EXPECT_THROW(run("s21", "r31_lightlike.curve"), UsageError);
  EXPECT_THROW(run("thm4_3", "s21_example.curve"), UsageError);
  EXPECT_THROW(run("s31", "s21_example.curve"), UsageError);
}

TEST(Verify, LightlikeSuites) {
  expect_pass(run("prop2_1", "r31_lightlike.curve"));
  expect_pass(run("prop4_1", "r31_lightlike.curve"));
  expect_pass(run("thm4_3", "r31_lightlike.curve"));
  expect_pass(run("prop2_1", "s21_example.curve"));
  expect_pass(run("prop2_1", "s31_lightlike.curve"));
}

TEST(Verify, SignatureSuite) {
  expect_pass(run("thm3_4", "r31_timelike.curve"));
  expect_pass(run("thm3_4", "r31_spacelike.curve"));
}

TEST(Verify, DeSitterSuites) {
  expect_pass(run("s21", "s21_example.curve"));
  expect_pass(run("s21", "s21_hyperbola.curve"));
  expect_pass(run("s21", "s21_spiral.curve"));
  expect_pass(run("s31", "s31_circle.curve"));
  expect_pass(run("s31", "s31_lightlike.curve"));
}

TEST(Verify, AllPrefixesSuiteNames) {
  const VerifyReport r = run("all", "r31_lightlike.curve");
  expect_pass(r);
  bool saw = false;
  for (const auto& a : r.assertions) saw |= a.name.rfind("thm4_3.", 0) == 0;
  EXPECT_TRUE(saw);
  // Curves without a lightlike point skip the lightlike suites under "all".
  for (const auto& a : run("all", "r31_timelike.curve").assertions) EXPECT_NE(a.name.rfind("prop4_1.", 0), 0u);
}

TEST(Verify, FailureIsReported) {
  const VerifyReport r = run("prop4_1", "r31_timelike.curve");
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->name, "has_certified_lightlike_point");
}
