#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "foursq/arith.hpp"

namespace foursq {

/// Variables are always x, y, z, w in this order.
inline constexpr int kVarCount = 4;
inline constexpr std::array<char, kVarCount> kVarNames{'x', 'y', 'z', 'w'};
inline constexpr int kMaxDegree = 4;

using Exponents = std::array<std::uint8_t, kVarCount>;

struct Monomial {
  Exponents exponents{};
  Int coefficient = 0;

  int degree() const { return exponents[0] + exponents[1] + exponents[2] + exponents[3]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Integer polynomial in x, y, z, w kept in canonical form: monomials sorted
/// by descending graded-lex order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Int c);
  static Polynomial variable(int index);
  /// Builds from arbitrary monomials, merging duplicates. Throws DegreeError.
  static Polynomial from_terms(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Int constant_term() const;

  int degree() const;
  int degree_in(int var) const;
  /// Bit i set iff variable i occurs.
  unsigned variable_mask() const { return mask_; }
  bool depends_on(int var) const { return (mask_ >> var) & 1U; }

  /// gcd of the coefficients (0 for the zero polynomial).
  Int content() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(Int k) const;
  /// Exact division of every coefficient; throws std::invalid_argument otherwise.
  Polynomial divided(Int k) const;
  Polynomial pow(int e) const;

  /// Exact value; throws OverflowError if a 128-bit intermediate overflows.
  Wide eval(std::span<const Int, kVarCount> point) const;

  /// Canonical text, e.g. "x^4+8y^3z+8yz^3" or "-x+2y-3".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<Monomial> terms_;
  unsigned mask_ = 0;
};

}  // namespace foursq
