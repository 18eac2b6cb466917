#include <gtest/gtest.h>

#include "foursq/constraint.hpp"
#include "foursq/errors.hpp"
#include "foursq/scanner.hpp"

namespace foursq {
namespace {

TEST(Representation, ChecksSumAndDomains) {
  EXPECT_NO_THROW(Representation(43, {1, 5, 4, 1}));
  EXPECT_THROW(Representation(44, {1, 5, 4, 1}), std::invalid_argument);
  EXPECT_THROW(Representation(3, {1, 1, -1, 0}), std::invalid_argument);
  EXPECT_NO_THROW(Representation(3, {1, 1, -1, 0}, kAllInteger));
  EXPECT_THROW(Representation(1, {1, 0, 0, 0}, {Domain::N, Domain::N, Domain::N, Domain::ZPos}),
               std::invalid_argument);
  EXPECT_EQ(Representation(43, {1, 5, 4, 1}).to_string(), "(1, 5, 4, 1)");
}

TEST(EvalPoly, ExactValues) {
  EXPECT_EQ(eval_poly(parse_polynomial("x+3y+5z"), Representation(43, {1, 5, 4, 1})), 36);
  EXPECT_EQ(eval_poly(parse_polynomial("x^4+8y^3z+8yz^3"), Representation(7, {1, 2, 1, 1})), 81);
}

TEST(Satisfies, SquareTarget) {
  const auto spec = parse_constraint("x+3y+5z ~ square [x,y,z,w in N]");
  const auto w = satisfies(Representation(43, {1, 5, 4, 1}), spec);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, Witness::Kind::Power);
  EXPECT_EQ(w->t, 6);
  EXPECT_EQ(w->value, 36);
  EXPECT_FALSE(satisfies(Representation(43, {5, 3, 3, 0}), spec));
}

TEST(Satisfies, ProductOverIntegers) {
  const auto spec = parse_constraint("(x+z)*(y+w) ~ square [Z]");
  const auto w = satisfies(Representation(3, {1, 1, -1, 0}, kAllInteger), spec);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->t, 0);
}

TEST(Satisfies, FourthPower) {
  const auto w = satisfies(Representation(7, {1, 2, 1, 1}),
                           parse_constraint("x^4+8y^3z+8yz^3 ~ power4 [N]"));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->t, 3);
}

TEST(Satisfies, OddExponentRootMayBeNegative) {
  const auto spec = parse_constraint("x+y ~ cube [Z]");
  const auto w = satisfies(Representation(2, {-1, 0, 1, 0}, kAllInteger), spec);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->t, -1);
  EXPECT_FALSE(satisfies(Representation(2, {-1, 0, 1, 0}, kAllInteger),
                         parse_constraint("x+y ~ nonneg_cube [Z]")));
}

TEST(Satisfies, ZeroProductReportsFactor) {
  const auto spec = parse_constraint("(x-y)*(x-2y) ~ zero [x,y,z,w in N]");
  ASSERT_EQ(std::get<ZeroProductTarget>(spec.alternatives[0]).factors.size(), 2u);
  const auto w = satisfies(Representation(5, {2, 1, 0, 0}), spec);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, Witness::Kind::ZeroFactor);
  EXPECT_EQ(w->factor, 1u);
  EXPECT_FALSE(satisfies(Representation(10, {3, 1, 0, 0}), spec));
}

TEST(Satisfies, LegsNeedPositiveLegsAndSquareSum) {
  const auto spec = parse_constraint("legs(x+4y+4z, 9x+3y+3z) [x,y,z,w in N; y>0]");
  const auto w = satisfies(Representation(2, {0, 1, 0, 1}), spec);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, Witness::Kind::Legs);
  EXPECT_EQ(w->t, 4);
  EXPECT_EQ(w->hypotenuse, 5);
  EXPECT_FALSE(satisfies(Representation(1, {1, 0, 0, 0}), spec));
  EXPECT_FALSE(satisfies(Representation(0, {0, 0, 0, 0}), parse_constraint("legs(x, y)")));
}

TEST(Satisfies, SideConditionsAndDisjunction) {
  const auto canon = parse_constraint("x+24y ~ square [N; z<=w]");
  EXPECT_TRUE(satisfies(Representation(2, {1, 0, 0, 1}), canon));
  EXPECT_FALSE(satisfies(Representation(2, {1, 0, 1, 0}), canon));
  const auto either = parse_constraint("xy+2zw ~ square | xy-2zw ~ square [N]");
  EXPECT_FALSE(satisfies(Representation(4, {1, 1, 1, 1}), either));
  const auto w = satisfies(Representation(12, {3, 1, 1, 1}), either);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->alternative, 1u);
}

TEST(Parser, CanonicalRoundTrip) {
  for (const char* text :
       {"x+3y+5z ~ square [x,y,z,w in N]", "(x-y)*(x-2y) ~ zero [x,y,z,w in N]",
        "legs(x+4y+4z, 9x+3y+3z) [x,y,z,w in N; y>0]", "x+y ~ 2*cube [x,y,z,w in Z]"}) {
    const auto spec = parse_constraint(text);
    EXPECT_EQ(spec.to_string(), text);
    EXPECT_EQ(parse_constraint(spec.to_string()), spec);
  }
}

TEST(Parser, Normalisations) {
  EXPECT_EQ(parse_constraint("x+24y ~ square [N; z<=w]").to_string(),
            "x+24y ~ square [x,y,z,w in N; w>=z]");
  EXPECT_EQ(parse_constraint("w(x+2y+3z) ~ square [w,y,z in N; x in Z+]").to_string(),
            "xw+2yw+3zw ~ square [y,z,w in N; x in Z+]");
  EXPECT_EQ(parse_constraint("x ~ square [N; max(x,y) >= min(z,w)]").to_string(),
            "x ~ square [x,y,z,w in N; x>=z or x>=w or y>=z or y>=w]");
}

TEST(Parser, DenominatorsAreCleared) {
  const auto spec = parse_constraint("xy+zw/2 ~ square");
  EXPECT_EQ(spec.to_string(), "2xy+zw ~ twice_square [x,y,z,w in N]");
  EXPECT_EQ(std::get<PowerTarget>(spec.alternatives[0]).cleared_denominator, 2);
}

TEST(Parser, Errors) {
  try {
    parse_constraint("x+ ~ square");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_constraint("x ~ circle"), SyntaxError);
  EXPECT_THROW(parse_constraint("x+y"), SyntaxError);
  EXPECT_THROW(parse_constraint("x^5 ~ square"), DegreeError);
  EXPECT_THROW(parse_constraint("x ~ square [x in Q]"), SyntaxError);
}

TEST(Parser, EveryNamedFamilyRoundTrips) {
  for (const auto& fam : named_families()) {
    const auto spec = parse_constraint(fam.spec);
    EXPECT_EQ(parse_constraint(spec.to_string()), spec) << fam.name;
  }
}

// Hand-derived identities behind the Pythagorean, square and fourth-power families.
TEST(Identities, SmallGrid) {
  const auto p = parse_polynomial("x+4y+4z");
  const auto q = parse_polynomial("9x+3y+3z");
  const auto sq = parse_polynomial("x^2y^2+y^2z^2+z^2x^2");
  for (Int y = 0; y <= 20; ++y) {
    for (Int z = 0; z <= 20; ++z) {
      const std::array<Int, kVarCount> a{y + z, y, z, 0};
      const Wide x = y + z;
      EXPECT_EQ(p.eval(a) * p.eval(a) + q.eval(a) * q.eval(a), 169 * x * x);
      const std::array<Int, kVarCount> b{y, z, y + z, 0};
      const Wide s = Wide{y} * y + Wide{y} * z + Wide{z} * z;
      EXPECT_EQ(sq.eval(b), s * s);
    }
  }
}

}  // namespace
}  // namespace foursq
