#include <dunkl/verify.hpp>
#include <gtest/gtest.h>

#include <set>

using namespace dunkl;

TEST(Verify, CheckIdsSortedAndUnique) {
  auto checks = build_checks(SuiteOptions{"all", 3, 0, {}});
  std::set<std::string> seen;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    EXPECT_TRUE(seen.insert(checks[i].id).second) << checks[i].id;
    if (i) EXPECT_LT(checks[i - 1].id, checks[i].id);
    EXPECT_FALSE(checks[i].anchor.empty());
  }
}

TEST(Verify, RankFilter) {
  for (auto& c : build_checks(SuiteOptions{"symbolic", 3, 2, {}})) EXPECT_EQ(c.n, 2) << c.id;
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(build_checks(SuiteOptions{"nope", 1, 0, {}}), std::invalid_argument); }

TEST(Verify, SymbolicSuiteIsExactAndReproducible) {
  SuiteOptions opt{"symbolic", 7, 2, {}};
  auto a = run_suite(opt), b = run_suite(opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].status, "pass") << a[i].check_id << " " << a[i].note;
    EXPECT_EQ(a[i].residual, 0.0);
    EXPECT_EQ(a[i].check_id, b[i].check_id);
  }
}

TEST(Verify, FixedMultiplicityOverride) {
  auto r = run_suite(SuiteOptions{"symbolic", 5, 1, Q(3, 2)});
  EXPECT_TRUE(all_passed(r));
}

TEST(Verify, FailureAndErrorReporting) {
  Check failing{"x", "anchor", "symbolic", 1, 1e-3, [] { return 1.0; }};
  Check throwing{"y", "anchor", "symbolic", 1, 1e-3, []() -> double { throw DomainError("bad"); }};
  EXPECT_EQ(run_check(failing).status, "fail");
  auto e = run_check(throwing);
  EXPECT_EQ(e.status, "error");
  EXPECT_EQ(e.note, "bad");
}
