#pragma once

// Polynomial lists shared by the family parser and the constructions.

#include <array>
#include <string_view>

#include "foursq/constructive.hpp"

namespace foursq::detail {

/// Ways to fix one coordinate relation from a ternary representation.
enum class Strategy {
  XZero,      ///< n not in E(1,1,1): x = 0
  YZero,      ///< n not in E(1,1,1): y = 0
  XEqY,       ///< n not in E(1,1,2): x = y
  XEq2Y,      ///< n not in E(1,1,5): x = 2y
  YEq2X,      ///< n not in E(1,1,5): y = 2x
  XEq3Y,      ///< n even, not in E(1,1,10): x = 3y
  EvenXZeroY, ///< n even, not in E(1,1,1): x even, y = 0
  SumXYZ,     ///< n not in E(1,2,6): x + y = z
};

std::string_view strategy_name(Strategy s);

struct ProductEntry {
  std::string_view poly;
  std::array<Strategy, 2> strategies;
};

/// The seven products P(x,y,z) whose vanishing is always attainable.
inline constexpr std::array<ProductEntry, 7> kProducts{{
    {"x(x-y)", {Strategy::XZero, Strategy::XEqY}},
    {"x(x-2y)", {Strategy::XZero, Strategy::XEq2Y}},
    {"(x-y)(x-2y)", {Strategy::XEqY, Strategy::XEq2Y}},
    {"(x-y)(x-3y)", {Strategy::XEqY, Strategy::XEq3Y}},
    {"x(x+y-z)", {Strategy::XZero, Strategy::SumXYZ}},
    {"(x-y)(x+y-z)", {Strategy::XEqY, Strategy::SumXYZ}},
    {"(x-2y)(x+y-z)", {Strategy::XEq2Y, Strategy::SumXYZ}},
}};

struct QuadraticEntry {
  std::string_view poly;
  std::string_view target;
  std::array<Strategy, 2> strategies;
};

/// The eighteen quadratics P(x,y) that are suitable.
inline constexpr std::array<QuadraticEntry, 18> kQuadratics{{
    {"x^2-y^2", "even_square", {Strategy::XEqY, Strategy::EvenXZeroY}},
    {"2x^2-2y^2", "square", {Strategy::XEqY, Strategy::XEq3Y}},
    {"3x^2-3y^2", "square", {Strategy::XEqY, Strategy::XEq2Y}},
    {"x^2-3y^2", "square", {Strategy::YZero, Strategy::XEq2Y}},
    {"3x^2-2y^2", "square", {Strategy::XEqY, Strategy::XEq3Y}},
    {"x^2+2y^2", "square", {Strategy::YZero, Strategy::YEq2X}},
    {"x^2+3y^2", "square", {Strategy::YZero, Strategy::XEqY}},
    {"x^2+5y^2", "square", {Strategy::YZero, Strategy::XEq2Y}},
    {"x^2+6y^2", "square", {Strategy::YZero, Strategy::YEq2X}},
    {"x^2+8y^2", "square", {Strategy::YZero, Strategy::XEqY}},
    {"x^2+12y^2", "square", {Strategy::YZero, Strategy::YEq2X}},
    {"2x^2+7y^2", "square", {Strategy::XEqY, Strategy::XEq3Y}},
    {"3x^2+4y^2", "square", {Strategy::XZero, Strategy::XEq2Y}},
    {"4x^2+5y^2", "square", {Strategy::YZero, Strategy::XEqY}},
    {"4x^2+9y^2", "square", {Strategy::YZero, Strategy::XEq2Y}},
    {"5x^2+11y^2", "square", {Strategy::XEqY, Strategy::YEq2X}},
    {"6x^2+10y^2", "square", {Strategy::XEqY, Strategy::XEq3Y}},
    {"7x^2+9y^2", "square", {Strategy::XZero, Strategy::XEqY}},
}};

/// Runs the proof procedure without the final check.
Construction build(const TheoremFamily& family, Int n);

}  // namespace foursq::detail
