#include <gtest/gtest.h>

#include "depth2/errors.hpp"
#include "depth2/io.hpp"
#include "depth2/verify.hpp"

namespace depth2 {
namespace {

TEST(RunSuite, Examples) {
  const VerificationReport dual = run_suite("duality_roundtrip", {.atoms = 3});
  EXPECT_TRUE(dual.passed);
  EXPECT_TRUE(dual.failures.empty());
  EXPECT_EQ(dual.atoms, 3);
  EXPECT_TRUE(run_suite("s42_equals_s43_depth2", {.worlds = 4}).passed);
  EXPECT_TRUE(run_suite("table1", {.worlds = 3}).passed);
}

TEST(RunSuite, Errors) {
  EXPECT_THROW(run_suite("no_such_suite"), LookupError);
  EXPECT_THROW(run_suite("table1", {.worlds = 9}), SizeError);
  EXPECT_THROW(run_suite("meets", {.atoms = 0}), SizeError);
}

// Every suite passes at its defaults and checks a nonzero number of cases.
TEST(RunSuite, CatalogPassesAtDefaults) {
  ASSERT_EQ(suite_catalog().size(), 12U);
  for (const SuiteInfo& info : suite_catalog()) {
    const VerificationReport r = run_suite(info.name);
    EXPECT_TRUE(r.passed) << info.name;
    EXPECT_EQ(r.passed, r.failures.empty()) << info.name;
    EXPECT_GT(r.checked, 0U) << info.name;
    EXPECT_EQ(r.suite, info.name);
    EXPECT_FALSE(r.citation.empty());
    for (const SuiteFailure& f : r.failures) ADD_FAILURE() << info.name << ": " << f.instance << " " << f.got;
  }
}

TEST(RunSuite, ReportsDoNotDependOnWorkers) {
  for (const char* name : {"table1", "conjugacy", "kn_embedding"}) {
    const VerificationReport one = run_suite(name, {.workers = 1});
    const VerificationReport many = run_suite(name, {.workers = 6});
    EXPECT_EQ(one.checked, many.checked) << name;
    EXPECT_EQ(one.passed, many.passed) << name;
    EXPECT_EQ(one.notes, many.notes) << name;
  }
}

TEST(RunSuite, Table1CoversEnoughInstances) { EXPECT_GE(run_suite("table1").checked, 3000U); }

TEST(ReportJson, Fields) {
  const nlohmann::json j = report_to_json(run_suite("meets"));
  for (const char* key : {"suite", "params", "checked", "failures", "elapsed_ms", "passed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["suite"], "meets");
  EXPECT_TRUE(j["failures"].is_array());
}

}  // namespace
}  // namespace depth2
