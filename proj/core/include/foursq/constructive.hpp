#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foursq/constraint.hpp"

namespace foursq {

/// A theorem family with its parameters. Parameters are validated against the
/// theorem's hypotheses at construction.
struct TheoremFamily {
  enum class Id {
    T11,     ///< a x^m + y^2 + z^2 + w^2, a in {1,4}, m in {4,5,6}
    T12i,    ///< a(x-y) square, a in {1,2}
    T12ii,   ///< x+y = c t^3 over Z, c in {1,2,4}
    T12iii,  ///< x+2y = d t^m over Z, d in {1,2}, m in {2,3}
    T12iv,   ///< (x+z)(y+w) square over Z
    T12v,    ///< n = 4^k(1+4x^2+y^2)+z^2
    T13i,    ///< x+y+cz = d t^m over Z, (c,d) in S(m)
    T13ii,   ///< x+3y square over Z; conditional
    T13iii,  ///< x+3y+5z square over Z; conditional
    T14i,    ///< P(x,y,z) = 0 for P in a fixed list of seven products
    T14ii,   ///< (2x-3y)(x+y-z) = 0; conditional
    T14iii,  ///< (x-y)z square with z > 0
    T14iv,   ///< x+4y+4z and 9x+3y+3z are Pythagorean legs, y > 0
    T14v,    ///< variant 1: x^2y^2+y^2z^2+z^2x^2 square; 2: x^2y^2+4y^2z^2+4z^2x^2
    T14vi,   ///< variant 1: x^4+8y^3z+8yz^3 fourth power; 2: x^4+16y^3z+64yz^3
    T15,     ///< a quadratic P(x,y) from a fixed list is a square
  };

  Id id = Id::T11;
  int a = 0;
  int m = 0;
  int c = 0;
  int d = 0;
  int variant = 0;
  /// Index into the polynomial list of T14i or T15.
  int index = 0;

  static TheoremFamily t11(int a, int m);
  static TheoremFamily t12i(int a);
  static TheoremFamily t12ii(int c);
  static TheoremFamily t12iii(int d, int m);
  static TheoremFamily t12iv();
  static TheoremFamily t12v();
  static TheoremFamily t13i(int c, int d, int m);
  static TheoremFamily t13ii();
  static TheoremFamily t13iii();
  /// `poly` must equal one of the seven listed products, e.g. "x(x-y)".
  static TheoremFamily t14i(std::string_view poly);
  static TheoremFamily t14ii();
  static TheoremFamily t14iii();
  static TheoremFamily t14iv();
  static TheoremFamily t14v(int variant);
  static TheoremFamily t14vi(int variant);
  /// `poly` must equal one of the eighteen listed quadratics, e.g. "x^2+3y^2".
  static TheoremFamily t15(std::string_view poly);

  /// Parses "t11:a=1,m=4", "t12iv", "t13i:c=2,d=4,m=3", "t14i:p=x(x-y)",
  /// "t14v:v=2", "t15:p=x^2+3y^2". Throws std::invalid_argument.
  static TheoremFamily parse(std::string_view text);
  /// Inverse of parse.
  std::string to_string() const;

  /// False for T11 and T12v, whose outputs are not four-square representations.
  bool four_square() const;
  /// The constraint every output satisfies. Throws std::logic_error unless four_square().
  ConstraintSpec spec() const;
  /// Smallest admissible n.
  Int n_min() const;
  /// True when the proof relies on an unproven numeric hypothesis.
  bool conditional() const;
  /// Every proof branch that occurs for some admissible n.
  std::vector<std::string> expected_branches() const;

  friend bool operator==(const TheoremFamily&, const TheoremFamily&) = default;
};

/// Every parameterisation of every unconditional family.
std::vector<TheoremFamily> unconditional_families();
/// The conditional families (T13ii, T13iii, T14ii).
std::vector<TheoremFamily> conditional_families();

/// Output of a construction.
///
/// `coords` is (x, y, z, w) for four-square families, (x, y, z, w) with
/// n = a x^m + y^2 + z^2 + w^2 for T11, and (k, x, y, z) for T12v.
struct Construction {
  std::array<Int, 4> coords{};
  Witness witness;
  int depth = 0;                      ///< 4-adic descent levels taken
  std::vector<std::string> branches;  ///< proof branch per level, outermost first

  /// The four-square representation; only for four_square() families.
  Representation representation(Int n, const TheoremFamily& family) const;
};

/// Builds a representation by following the theorem's proof. The result is
/// checked before returning. Throws HypothesisFailure (conditional families
/// only), std::invalid_argument below n_min, OverflowError past the cap.
Construction construct(const TheoremFamily& family, Int n);

/// True iff the construction satisfies the family's statement for n.
bool check_construction(const TheoremFamily& family, Int n, const Construction& c);

struct Thm12v {
  int k = 0;
  Int x = 0;
  Int y = 0;
  Int z = 0;

  friend bool operator==(const Thm12v&, const Thm12v&) = default;
};

/// n = 4^k(1 + 4x^2 + y^2) + z^2 with k, x, y, z >= 0. Requires n >= 1.
Thm12v construct_thm12v(Int n);

/// "71 = 1^4 + 3^2 + 5^2 + 6^2" style rendering.
std::string format_construction(const TheoremFamily& family, Int n, const Construction& c);

struct ValidationFailure {
  Int n = 0;
  std::string reason;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  std::map<std::string, std::uint64_t> branch_hits;
  std::uint64_t checked = 0;
  int max_depth = 0;

  /// Expected branches that were never taken.
  std::vector<std::string> missing_branches(const TheoremFamily& family) const;
};

/// Constructs and re-checks every admissible n <= bound. Hypothesis failures
/// and depth-bound violations are recorded as failures.
ValidationReport batch_validate(const TheoremFamily& family, Int bound);

}  // namespace foursq
