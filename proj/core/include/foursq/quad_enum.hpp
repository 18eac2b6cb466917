#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foursq/constraint.hpp"

namespace foursq {

/// Enumeration order: x outermost, w innermost. Each coordinate runs through
/// its domain by magnitude ascending, positive before negative, zero once.
/// For N-domains this is plain lexicographic order.
using RepresentationVisitor = std::function<bool(const Representation&)>;

/// Calls `visit` for every representation of n in order until it returns true.
/// Returns true iff the visitor stopped the walk. Throws OverflowError past the cap.
bool for_each_representation(Int n, const DomainSet& domains, const RepresentationVisitor& visit);

/// Every representation of n, in enumeration order.
std::vector<Representation> enumerate_four_squares(Int n, const DomainSet& domains = kAllNatural);

/// Number of representations of n over the domains.
std::uint64_t count_four_squares(Int n, const DomainSet& domains = kAllNatural);

struct SearchOptions {
  /// Skip subtrees whose assigned prefix already violates the spec, and solve
  /// a target linear in z for z instead of looping over it.
  bool prune = true;
};

struct SearchStats {
  std::uint64_t visited = 0;  ///< complete representations tested
  std::uint64_t pruned = 0;   ///< prefixes rejected before reaching a leaf
};

struct Found {
  Representation rep;
  Witness witness;
};

/// The first satisfying representation in enumeration order. Absence means no
/// representation of n satisfies the spec.
std::optional<Found> find_constrained(Int n, const ConstraintSpec& spec,
                                      const SearchOptions& options = {},
                                      SearchStats* stats = nullptr);

/// Calls `visit` for every satisfying representation in enumeration order
/// until it returns true.
void for_each_constrained(Int n, const ConstraintSpec& spec,
                          const std::function<bool(const Found&)>& visit,
                          const SearchOptions& options = {}, SearchStats* stats = nullptr);

/// How satisfying representations are counted.
struct DedupRule {
  enum class Kind { Ordered, UnorderedMultiset, SideConditionCanonical };

  Kind kind = Kind::Ordered;
  /// Extra conditions selecting one canonical tuple (SideConditionCanonical).
  std::vector<SideClause> canonical;

  static DedupRule ordered() { return {}; }
  static DedupRule unordered() { return {Kind::UnorderedMultiset, {}}; }
  /// E.g. canonical("z<=w"). Throws SyntaxError.
  static DedupRule canonical_by(std::string_view conditions);

  /// Parses "ordered", "unordered" or "canonical:<conditions>".
  static DedupRule parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const DedupRule&, const DedupRule&) = default;
};

/// Number of satisfying representations of n under the rule. UnorderedMultiset
/// identifies tuples that differ by a permutation of variables sharing a domain.
std::uint64_t count_constrained(Int n, const ConstraintSpec& spec,
                                const DedupRule& dedup = DedupRule::ordered(),
                                const SearchOptions& options = {});

}  // namespace foursq
