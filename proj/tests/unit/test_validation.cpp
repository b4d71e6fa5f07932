#include <gtest/gtest.h>

#include <set>

#include "bootcov/validation.hpp"

using namespace bootcov;

TEST(Registry, EveryModuleHasPairingsInBothSuites) {
  std::set<std::string> full, quick;
  for (const auto& p : oracle_registry()) {
    full.insert(p.module);
    if (p.quick) quick.insert(p.module);
  }
  const std::set<std::string> expected{"percentile-core", "binom-one", "binom-two", "normal-param",
                                       "nonparam-percentile"};
  EXPECT_EQ(full, expected);
  EXPECT_EQ(quick, expected);
}

TEST(QuickSuite, PassesAndIsDeterministic) {
  ValidationOptions o;
  o.reps = 20000;
  const auto a = run_validation(o);
  const auto b = run_validation(o);
  EXPECT_TRUE(a.all_pass);
  for (const auto& f : a.failed_pairings) ADD_FAILURE() << f;
  ASSERT_EQ(a.comparisons.size(), b.comparisons.size());
  for (std::size_t i = 0; i < a.comparisons.size(); ++i) {
    EXPECT_EQ(a.comparisons[i].oracle, b.comparisons[i].oracle);
    EXPECT_EQ(a.comparisons[i].pass, b.comparisons[i].pass);
  }
}
