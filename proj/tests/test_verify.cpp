#include <gtest/gtest.h>

#include <set>

#include "expcong/error.hpp"
#include "expcong/verify.hpp"

using namespace expcong;

TEST(Verify, CatalogIdsAreUnique) {
  std::set<std::string_view> ids;
  for (const auto& t : theorem_catalog()) {
    EXPECT_TRUE(ids.insert(t.id).second) << t.id;
    EXPECT_FALSE(t.reference.empty());
  }
  for (auto id : {"multiplicativity", "jacobi-relation", "euler-product-breakage"}) EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Verify, QuickScaleAllPass) {
  const VerifyReport r = run_verification({}, VerifyScale::quick());
  EXPECT_EQ(r.results.size(), theorem_catalog().size());
  for (const auto& t : r.results) EXPECT_TRUE(t.passed) << t.id << ": " << t.detail;
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.first_failure(), nullptr);
}

TEST(Verify, ExpectedFailuresReproduceWitnesses) {
  const VerifyReport r = run_verification({"multiplicativity", "jacobi-relation"}, VerifyScale::quick());
  ASSERT_EQ(r.results.size(), 2u);
  for (const auto& t : r.results) {
    EXPECT_TRUE(t.expected_failure);
    EXPECT_TRUE(t.passed) << t.detail;
  }
  EXPECT_NE(r.results[0].detail.find("(6/5)_1"), std::string::npos);
}

TEST(Verify, SelectsRequestedSuites) {
  const VerifyReport r = run_verification({"prime-count"}, VerifyScale::quick());
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].id, "prime-count");
  EXPECT_GT(r.results[0].checks, 0u);
}

TEST(Verify, UnknownSuiteIsDomainError) {
  EXPECT_THROW(run_verification({"no-such-suite"}, VerifyScale::quick()), DomainError);
}
