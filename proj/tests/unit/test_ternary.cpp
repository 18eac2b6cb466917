#include <gtest/gtest.h>

#include <algorithm>

#include "foursq/errors.hpp"
#include "foursq/ternary.hpp"

namespace foursq {
namespace {

bool brute_representable(const TernaryForm& f, Int n) {
  for (Int x = 0; f.a * x * x <= n; ++x)
    for (Int y = 0; f.a * x * x + f.b * y * y <= n; ++y)
      for (Int z = 0; f.value(x, y, z) <= n; ++z)
        if (f.value(x, y, z) == n) return true;
  return false;
}

TEST(TernaryForm, ParseAndCanonicalText) {
  const auto f = TernaryForm::parse("6, 1,2");
  EXPECT_EQ(f.to_string(), "1,2,6");
  EXPECT_EQ(f.value(1, 1, 1), 9);
  EXPECT_THROW(TernaryForm::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(TernaryForm::parse("1,0,2"), std::invalid_argument);
  EXPECT_THROW(TernaryForm::parse("a,b,c"), std::invalid_argument);
}

TEST(Catalog, HasTenRulesAndLookupIgnoresOrder) {
  EXPECT_EQ(exception_catalog().size(), 10u);
  const auto* r = find_exception_rule({6, 2, 1});
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->name, "E(1,2,6)");
  EXPECT_EQ(find_exception_rule({1, 1, 3}), nullptr);
}

TEST(Membership, KnownValues) {
  EXPECT_EQ(exception_membership({1, 2, 6}, 5), Membership::Member);
  EXPECT_EQ(exception_membership({1, 2, 6}, 9), Membership::NotMember);
  EXPECT_EQ(exception_membership({1, 1, 1}, 7), Membership::Member);
  EXPECT_EQ(exception_membership({1, 1, 1}, 28), Membership::Member);
  EXPECT_EQ(exception_membership({1, 1, 1}, 14), Membership::NotMember);
  EXPECT_EQ(exception_membership({2, 3, 6}, 1), Membership::Member);
  EXPECT_EQ(exception_membership({2, 3, 6}, 7), Membership::Member);
  EXPECT_EQ(exception_membership({1, 1, 10}, 6), Membership::Member);
  EXPECT_EQ(to_string(Membership::Member), "member");
  EXPECT_EQ(to_string(Membership::NotMember), "not-member");
  EXPECT_EQ(to_string(Membership::Unknown), "unknown");
}

TEST(Membership, UncataloguedAndOddQueriesThrow) {
  EXPECT_THROW(exception_membership({1, 1, 3}, 5), UnknownFormError);
  EXPECT_THROW(exception_membership({1, 1, 10}, 3), UnknownFormError);
}

TEST(Membership, OneSidedRuleNeverClaimsMembership) {
  for (Int n = 0; n <= 2000; ++n) {
    const auto m = exception_membership({1, 4, 16}, n);
    ASSERT_NE(m, Membership::Member);
    if (m == Membership::NotMember) {
      ASSERT_EQ(n % 4, 1) << n;
      ASSERT_TRUE(brute_representable({1, 4, 16}, n)) << n;
    }
  }
}

TEST(Membership, ClosedFormsAgreeWithBruteForceSmall) {
  for (const auto& rule : exception_catalog()) {
    if (rule.one_sided) continue;
    for (Int n = 0; n <= 1500; ++n) {
      if (rule.even_only && n % 2) continue;
      const bool member = exception_membership(rule.form, n) == Membership::Member;
      ASSERT_EQ(member, !brute_representable(rule.form, n)) << rule.name << " n=" << n;
    }
  }
}

TEST(Enumerate, NaturalSolutionsSorted) {
  const auto sols = enumerate_ternary({1, 2, 6}, 9, TernaryDomain::N);
  const std::vector<std::array<Int, 3>> expected{{1, 1, 1}, {1, 2, 0}, {3, 0, 0}};
  EXPECT_EQ(sols, expected);
}

TEST(Enumerate, IntegerSolutionsIncludeSigns) {
  const auto sols = enumerate_ternary({1, 1, 1}, 1, TernaryDomain::Z);
  EXPECT_EQ(sols.size(), 6u);
  for (const auto& s : sols) EXPECT_EQ(s[0] * s[0] + s[1] * s[1] + s[2] * s[2], 1);
}

TEST(FindTernary, SolutionOrAbsence) {
  const auto s = find_ternary({1, 2, 6}, 9);
  ASSERT_TRUE(s);
  EXPECT_EQ(TernaryForm({1, 2, 6}).value((*s)[0], (*s)[1], (*s)[2]), 9);
  EXPECT_FALSE(find_ternary({1, 2, 6}, 5));
}

TEST(RepresentableTable, MatchesBruteForce) {
  const TernaryForm f{1, 1, 10};
  const auto table = representable_table(f, 400);
  for (Int n = 0; n <= 400; ++n) ASSERT_EQ(table[n], brute_representable(f, n)) << n;
}

TEST(VerifyCatalog, NoMismatchesAndUnknownFormThrows) {
  for (const auto& rule : exception_catalog()) {
    EXPECT_TRUE(verify_exception_catalog(rule.form, 5000).empty()) << rule.name;
  }
  EXPECT_THROW(verify_exception_catalog({1, 1, 3}, 10), UnknownFormError);
}

TEST(Disjointness, SixSetsDisjointSmall) {
  EXPECT_TRUE(pairwise_disjoint(100000).empty());
  EXPECT_EQ(disjoint_family_names()[3], "E(1,2,6)");
}

TEST(Predicates, SpotChecks) {
  EXPECT_TRUE(in_E111(7));
  EXPECT_TRUE(in_E112(14));
  EXPECT_TRUE(in_E126(5));
  EXPECT_TRUE(in_E123(10));
  EXPECT_TRUE(in_E115(3));
  EXPECT_TRUE(in_E1110_even(6));
  EXPECT_FALSE(in_E1110_even(2));
  EXPECT_TRUE(in_E155(2));
  EXPECT_TRUE(in_E136(2));
  EXPECT_TRUE(in_E236(1));
}

}  // namespace
}  // namespace foursq
