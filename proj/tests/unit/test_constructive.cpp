#include <gtest/gtest.h>

#include <cmath>

#include "foursq/constructive.hpp"
#include "foursq/errors.hpp"
#include "foursq/quad_enum.hpp"

namespace foursq {
namespace {

using Coords = std::array<Int, 4>;

TEST(Construct, FourthPowerPlusThreeSquares) {
  const auto f = TheoremFamily::t11(1, 4);
  const auto c = construct(f, 71);
  EXPECT_EQ(c.coords, (Coords{1, 3, 5, 6}));
  EXPECT_EQ(format_construction(f, 71, c), "71 = 1^4 + 3^2 + 5^2 + 6^2");
  EXPECT_TRUE(check_construction(f, 71, c));
}

TEST(Construct, FifthPowerPlusThreeSquares) {
  const auto c = construct(TheoremFamily::t11(1, 5), 240);
  EXPECT_EQ(c.coords, (Coords{2, 0, 8, 12}));
}

TEST(Construct, ProductSquareOverIntegers) {
  const auto f = TheoremFamily::t12iv();
  const auto c = construct(f, 3);
  EXPECT_EQ(c.coords, (Coords{1, 1, -1, 0}));
  EXPECT_EQ(c.witness.t, 0);
  EXPECT_EQ(format_construction(f, 3, c), "3 = 1^2 + 1^2 + (-1)^2 + 0^2");
  EXPECT_EQ(c.representation(3, f).domains(), kAllInteger);
}

TEST(Construct, PowerOfFourShape) {
  EXPECT_EQ(construct_thm12v(1), (Thm12v{0, 0, 0, 0}));
  EXPECT_EQ(construct_thm12v(2), (Thm12v{0, 0, 1, 0}));
  EXPECT_EQ(construct_thm12v(3), (Thm12v{0, 0, 1, 1}));
  EXPECT_EQ(construct_thm12v(4), (Thm12v{1, 0, 0, 0}));
  const auto f = TheoremFamily::t12v();
  EXPECT_EQ(format_construction(f, 2, construct(f, 2)), "2 = 4^0(1 + 4*0^2 + 1^2) + 0^2");
  for (Int n = 1; n <= 5000; ++n) {
    const auto r = construct_thm12v(n);
    const Int p = Int{1} << (2 * r.k);
    ASSERT_EQ(p * (1 + 4 * r.x * r.x + r.y * r.y) + r.z * r.z, n) << n;
  }
}

TEST(Construct, PythagoreanLegs) {
  const auto c = construct(TheoremFamily::t14iv(), 2);
  EXPECT_EQ(c.coords, (Coords{0, 1, 0, 1}));
  EXPECT_EQ(c.witness.kind, Witness::Kind::Legs);
  EXPECT_EQ(c.witness.hypotenuse, 5);
}

TEST(Construct, MinimumAdmissibleN) {
  EXPECT_EQ(TheoremFamily::t14iii().n_min(), 1);
  EXPECT_EQ(TheoremFamily::t12i(1).n_min(), 0);
  EXPECT_THROW(construct(TheoremFamily::t14iii(), 0), std::invalid_argument);
  EXPECT_THROW(construct(TheoremFamily::t12i(1), kMaxN + 1), OverflowError);
}

TEST(Family, ParametersRestrictedToHypotheses) {
  EXPECT_THROW(TheoremFamily::t11(2, 4), std::invalid_argument);
  EXPECT_THROW(TheoremFamily::t11(1, 7), std::invalid_argument);
  EXPECT_THROW(TheoremFamily::t12i(3), std::invalid_argument);
  EXPECT_THROW(TheoremFamily::t12ii(3), std::invalid_argument);
  EXPECT_THROW(TheoremFamily::t13i(1, 4, 2), std::invalid_argument);
  EXPECT_THROW(TheoremFamily::t13i(2, 3, 3), std::invalid_argument);
  EXPECT_NO_THROW(TheoremFamily::t13i(2, 6, 2));
  EXPECT_THROW(TheoremFamily::t14i("x(x-5y)"), std::invalid_argument);
  EXPECT_THROW(TheoremFamily::t15("x^2+7y^2"), std::invalid_argument);
  EXPECT_THROW(TheoremFamily::t14v(3), std::invalid_argument);
}

TEST(Family, TextRoundTrip) {
  auto all = unconditional_families();
  const auto cond = conditional_families();
  all.insert(all.end(), cond.begin(), cond.end());
  EXPECT_EQ(all.size(), 63u);
  for (const auto& f : all) {
    EXPECT_EQ(TheoremFamily::parse(f.to_string()), f) << f.to_string();
    EXPECT_FALSE(f.expected_branches().empty()) << f.to_string();
  }
  for (const auto& f : cond) EXPECT_TRUE(f.conditional());
  EXPECT_EQ(TheoremFamily::parse("t11:a=1,m=4"), TheoremFamily::t11(1, 4));
  EXPECT_THROW(TheoremFamily::parse("t99"), std::invalid_argument);
}

TEST(Construct, SoundAndShallowAtSmallScale) {
  for (const auto& f : unconditional_families()) {
    const auto report = batch_validate(f, 1500);
    EXPECT_TRUE(report.failures.empty()) << f.to_string() << ": " << report.failures.front().reason;
    EXPECT_LE(report.max_depth, static_cast<int>(std::log(1500.0) / std::log(4.0)) + 1) << f.to_string();
  }
}

TEST(Construct, ConditionalFamiliesValidAtSmallScale) {
  for (const auto& f : conditional_families()) {
    const auto report = batch_validate(f, 1500);
    EXPECT_TRUE(report.failures.empty()) << f.to_string();
  }
}

TEST(Construct, AgreesWithSearch) {
  for (const auto& f : unconditional_families()) {
    if (!f.four_square()) continue;
    const auto spec = f.spec();
    for (Int n = f.n_min(); n <= 300; ++n) {
      bool built = true;
      try {
        construct(f, n);
      } catch (const Error&) {
        built = false;
      }
      ASSERT_EQ(built, find_constrained(n, spec).has_value()) << f.to_string() << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace foursq
