#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "foursq/arith.hpp"

namespace foursq {

/// a x^2 + b y^2 + c z^2 with positive coefficients. Identity keeps the input
/// order; only display and catalogue lookup sort the coefficients.
struct TernaryForm {
  Int a = 1;
  Int b = 1;
  Int c = 1;

  /// "a,b,c" with coefficients ascending.
  std::string to_string() const;
  std::array<Int, 3> sorted() const;
  Int value(Int x, Int y, Int z) const { return a * x * x + b * y * y + c * z * z; }

  /// Parses "a,b,c". Throws std::invalid_argument.
  static TernaryForm parse(const std::string& text);

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
};

enum class Membership { NotMember, Member, Unknown };

std::string to_string(Membership m);

/// {4^k (M l + r) : k, l >= 0}
struct FourAdicClause {
  Int modulus;
  Int residue;
};

/// {n : n mod M in R}
struct ResidueClause {
  Int modulus;
  std::vector<Int> residues;
};

using ExceptionClause = std::variant<FourAdicClause, ResidueClause>;

bool clause_contains(const ExceptionClause& clause, Int n);

/// Closed-form description of E(a,b,c) as a union of clauses.
///
/// `even_only` rules are exact on even n and say nothing about odd n.
/// `one_sided` rules list residues that are known representable and nothing
/// else; they never certify membership.
struct ExceptionRule {
  TernaryForm form;
  std::vector<ExceptionClause> clauses;
  bool even_only = false;
  bool one_sided = false;
  std::string name;  ///< e.g. "E(1,2,6)"
};

/// The ten catalogued forms, in a fixed order.
const std::vector<ExceptionRule>& exception_catalog();

/// Rule for `form` (coefficient order ignored), or nullptr.
const ExceptionRule* find_exception_rule(const TernaryForm& form);

/// Membership of n in E(form) via the closed form. Throws UnknownFormError for
/// an uncatalogued form or an odd query against the even-only E(1,1,10) rule.
/// For the one-sided E(1,4,16) rule the answer is NotMember or Unknown.
Membership exception_membership(const TernaryForm& form, Int n);

enum class TernaryDomain { N, Z };

/// All solutions of a x^2 + b y^2 + c z^2 = n, sorted lexicographically by
/// integer value, duplicate free.
std::vector<std::array<Int, 3>> enumerate_ternary(const TernaryForm& form, Int n,
                                                  TernaryDomain domain = TernaryDomain::Z);

/// First solution over N^3 in lexicographic order (x, then y ascending).
std::optional<std::array<Int, 3>> find_ternary(const TernaryForm& form, Int n);

/// representable[n] for 0 <= n <= bound, by marking every value of the form.
std::vector<bool> representable_table(const TernaryForm& form, Int bound);

/// Every n <= bound where the closed form disagrees with brute-force
/// representability. One-sided rules only check their sufficient direction;
/// the even-only rule only checks even n.
std::vector<Int> verify_exception_catalog(const TernaryForm& form, Int bound);

/// The six sets E(1,1,1), E(1,1,2), E(1,2,3), E(1,2,6), E(1,1,5), E(1,1,10)∩2Z.
struct DisjointnessViolation {
  Int n;
  int first;   ///< index into disjoint_family_names()
  int second;

  friend bool operator==(const DisjointnessViolation&, const DisjointnessViolation&) = default;
};

const std::array<std::string, 6>& disjoint_family_names();

/// Checks 0 <= n <= bound against the six sets using closed forms only.
std::vector<DisjointnessViolation> pairwise_disjoint(Int bound);

/// Convenience predicates used by the constructions. All exact.
bool in_E111(Int n);
bool in_E112(Int n);
bool in_E115(Int n);
bool in_E123(Int n);
bool in_E126(Int n);
bool in_E136(Int n);
bool in_E155(Int n);
bool in_E236(Int n);
/// E(1,1,10) restricted to even n; odd n answers false.
bool in_E1110_even(Int n);

}  // namespace foursq
