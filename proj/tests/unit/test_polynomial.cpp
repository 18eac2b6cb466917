#include <gtest/gtest.h>

#include "foursq/constraint.hpp"
#include "foursq/errors.hpp"
#include "foursq/polynomial.hpp"

namespace foursq {
namespace {

Wide at(const Polynomial& p, Int x, Int y, Int z, Int w) {
  const std::array<Int, kVarCount> pt{x, y, z, w};
  return p.eval(pt);
}

TEST(Polynomial, CanonicalTextIsGradedLex) {
  EXPECT_EQ(parse_polynomial("8yz^3 + x^4 + 8y^3z").to_string(), "x^4+8y^3z+8yz^3");
  EXPECT_EQ(parse_polynomial("3 - 2*y + x").to_string(), "x-2y+3");
  EXPECT_EQ(parse_polynomial("x - x").to_string(), "0");
}

TEST(Polynomial, Evaluation) {
  const auto p = parse_polynomial("x^4+8y^3z+8yz^3");
  EXPECT_EQ(at(p, 1, 2, 1, 1), 81);
  EXPECT_EQ(at(parse_polynomial("x+3y+5z"), 1, 5, 4, 1), 36);
  EXPECT_EQ(at(parse_polynomial("x+3y+5z"), 0, 0, 0, 0), 0);
  const Int big = Int{1} << 20;
  EXPECT_EQ(at(p, big, big, big, 0), static_cast<Wide>(17) * big * big * big * big);
}

TEST(Polynomial, Arithmetic) {
  const auto x = Polynomial::variable(0);
  const auto y = Polynomial::variable(1);
  const auto sq = (x + y).pow(2);
  EXPECT_EQ(sq.to_string(), "x^2+2xy+y^2");
  EXPECT_EQ((sq - x * x).to_string(), "2xy+y^2");
  EXPECT_EQ((-x).scaled(3).to_string(), "-3x");
  EXPECT_EQ(sq.scaled(4).divided(2), sq.scaled(2));
  EXPECT_THROW(sq.divided(2), std::invalid_argument);
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_EQ(sq.degree_in(1), 2);
  EXPECT_EQ(sq.variable_mask(), 3u);
  EXPECT_EQ(parse_polynomial("4x+6y").content(), 2);
  EXPECT_TRUE(Polynomial::constant(5).is_constant());
  EXPECT_EQ(Polynomial::constant(5).constant_term(), 5);
}

TEST(Polynomial, DegreeCap) {
  EXPECT_THROW(parse_polynomial("x^5"), DegreeError);
  EXPECT_THROW(parse_polynomial("x^2y^2z"), DegreeError);
  EXPECT_THROW(Polynomial::variable(0).pow(5), DegreeError);
  EXPECT_NO_THROW(parse_polynomial("xyzw"));
}

TEST(Polynomial, RoundTrip) {
  for (const char* text : {"x^2y^2+y^2z^2+x^2z^2", "2x-3y", "-x+2y-3", "xy+2zw", "x^4+16y^3z+64yz^3"}) {
    const auto p = parse_polynomial(text);
    EXPECT_EQ(parse_polynomial(p.to_string()), p) << text;
  }
}

}  // namespace
}  // namespace foursq
