#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "foursq/arith.hpp"
#include "foursq/polynomial.hpp"

namespace foursq {

enum class Domain { N, Z, ZPos };

std::string_view to_string(Domain d);
bool domain_admits(Domain d, Int v);

using DomainSet = std::array<Domain, kVarCount>;

inline constexpr DomainSet kAllNatural{Domain::N, Domain::N, Domain::N, Domain::N};
inline constexpr DomainSet kAllInteger{Domain::Z, Domain::Z, Domain::Z, Domain::Z};

/// A four-square representation x^2+y^2+z^2+w^2 = n with per-coordinate domains.
class Representation {
 public:
  /// Checks every coordinate against its domain and the sum against n.
  /// Throws std::invalid_argument on violation.
  Representation(Int n, std::array<Int, kVarCount> coords, DomainSet domains = kAllNatural);

  Int n() const { return n_; }
  const std::array<Int, kVarCount>& coords() const { return coords_; }
  const DomainSet& domains() const { return domains_; }
  Int operator[](std::size_t i) const { return coords_[i]; }

  /// "(x, y, z, w)"
  std::string to_string() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Int n_;
  std::array<Int, kVarCount> coords_;
  DomainSet domains_;
};

/// P lies in a power class. `cleared_denominator` records a denominator folded
/// into both P and the class scale at parse time; it does not affect equality.
struct PowerTarget {
  Polynomial poly;
  PowerClass cls;
  Int cleared_denominator = 1;

  friend bool operator==(const PowerTarget& a, const PowerTarget& b) {
    return a.poly == b.poly && a.cls == b.cls;
  }
};

/// Satisfied iff some factor evaluates to exactly zero.
struct ZeroProductTarget {
  std::vector<Polynomial> factors;

  friend bool operator==(const ZeroProductTarget&, const ZeroProductTarget&) = default;
};

/// P > 0, Q > 0 and P^2 + Q^2 a perfect square.
struct LegsTarget {
  Polynomial p;
  Polynomial q;

  friend bool operator==(const LegsTarget&, const LegsTarget&) = default;
};

using Target = std::variant<PowerTarget, ZeroProductTarget, LegsTarget>;

/// expr > 0 (strict) or expr >= 0, with expr linear.
struct LinearAtom {
  Polynomial expr;
  bool strict = false;

  bool holds(std::span<const Int, kVarCount> point) const;
  std::string to_string() const;

  friend bool operator==(const LinearAtom&, const LinearAtom&) = default;
};

/// Disjunction of atoms; a spec's side conditions are a conjunction of clauses.
struct SideClause {
  std::vector<LinearAtom> any_of;

  bool holds(std::span<const Int, kVarCount> point) const;
  unsigned variable_mask() const;
  std::string to_string() const;

  friend bool operator==(const SideClause&, const SideClause&) = default;
};

/// Constraint on a representation: any of the alternatives holds, every side
/// clause holds, and every coordinate lies in its domain.
struct ConstraintSpec {
  std::vector<Target> alternatives;
  DomainSet domains = kAllNatural;
  std::vector<SideClause> side_conditions;

  /// Canonical DSL text; parse_constraint(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const ConstraintSpec&, const ConstraintSpec&) = default;
};

/// Certificate for a satisfied target.
struct Witness {
  enum class Kind { Power, ZeroFactor, Legs };

  Kind kind = Kind::Power;
  std::size_t alternative = 0;  ///< which alternative of the spec held
  Int t = 0;                    ///< root for Power, 0 for ZeroFactor, P for Legs
  std::size_t factor = 0;       ///< vanishing factor index for ZeroFactor
  Int hypotenuse = 0;           ///< Legs only
  Wide value = 0;               ///< polynomial value (P^2+Q^2 for Legs)

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// "t=6 (x+3y+5z = 6^2)" style description.
std::string describe(const Witness& w, const ConstraintSpec& spec);

Wide eval_poly(const Polynomial& poly, const Representation& rep);

/// Witness iff domains, side conditions and some alternative hold.
std::optional<Witness> satisfies(const Representation& rep, const ConstraintSpec& spec);

/// Domain-free fast path used by the search engine; still checks side
/// conditions and targets.
std::optional<Witness> satisfies_point(std::span<const Int, kVarCount> point,
                                       const ConstraintSpec& spec);

/// Target check alone (no side conditions, no domains).
std::optional<Witness> check_target(const Target& target, std::span<const Int, kVarCount> point);

/// Parses the constraint DSL:
///
///   spec    := clause ('|' clause)* ['[' item (';' item)* ']']
///   clause  := expr '~' target | 'legs' '(' expr ',' expr ')'
///   target  := [INT '*'] (zero|square|even_square|twice_square|cube|nonneg_cube|powerK)
///   item    := ('N'|'Z'|'Z+') | vars 'in' ('N'|'Z'|'Z+') | cond ('or' cond)*
///   cond    := side (('<'|'<='|'>'|'>='|'=') side)+
///   side    := lin | '|' lin '|' | max(lin, ...) | min(lin, ...)
///
/// Expressions use x, y, z, w, integer literals, + - * ^ (exponent <= 4),
/// implicit multiplication ("3xy^2") and division by integer literals (cleared
/// into the target scale). A product of factors with target `zero` becomes a
/// zero-product target. Whitespace is ignored.
///
/// Throws SyntaxError (with position) or DegreeError.
ConstraintSpec parse_constraint(std::string_view text);

/// Parses one polynomial expression (no denominators).
Polynomial parse_polynomial(std::string_view text);

/// Parses a list of side-condition items such as "z<=w; y>0" (no domains).
std::vector<SideClause> parse_side_conditions(std::string_view text);

}  // namespace foursq
