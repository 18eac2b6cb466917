#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foursq/quad_enum.hpp"

namespace foursq {

/// a(n) = count_constrained(n, spec, dedup) for n >= offset.
struct SequenceDef {
  ConstraintSpec spec;
  DedupRule dedup;
  Int offset = 0;
};

using SequenceRow = std::pair<Int, std::uint64_t>;

/// Rows for n in [max(lo, offset), hi), ascending. `workers` = 0 uses the
/// hardware concurrency; the output does not depend on it.
std::vector<SequenceRow> generate(const SequenceDef& def, Int lo, Int hi, unsigned workers = 1);

/// Writes "<n> <a(n)>\n" per row and returns the byte count. Throws
/// NonContiguousRows unless each n is one more than the previous.
std::size_t emit_bfile(const std::vector<SequenceRow>& rows, std::ostream& sink);

/// Catalog line: "<A-number> <DSL spec> <dedup> <offset> [verified|unverified]".
/// The dedup token has no spaces; a missing flag means unverified.
struct CatalogEntry {
  std::string id;
  std::string spec_text;
  DedupRule dedup;
  Int offset = 0;
  /// The dedup convention and offset have been compared with the published sequence.
  bool verified = false;

  SequenceDef def() const;
};

/// Parses catalog text; '#' starts a comment line. Throws SyntaxError with the
/// 1-based line number as position.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

/// $FOURSQ_CATALOG, else the installed data file, else the source tree copy.
std::filesystem::path default_catalog_path();

/// Throws std::invalid_argument for unknown ids.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view id);

}  // namespace foursq
