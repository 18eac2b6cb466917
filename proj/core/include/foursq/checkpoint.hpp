#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>

#include "foursq/arith.hpp"

namespace foursq {

/// On-disk scan state. Line-oriented text:
///
///   header <digest:16 hex> <lo> <hi> <chunk>
///   spec <canonical DSL>
///   exclude <template list or "none">
///   prefix <verified prefix>
///   done <chunk index>      (ascending)
///   cex <n>                 (ascending)
///
/// Counterexamples are only recorded for completed chunks.
struct Checkpoint {
  std::uint64_t digest = 0;
  Int lo = 0;
  Int hi = 0;
  Int chunk = 1;
  std::string spec_text;
  std::string exclusion_text;
  std::set<std::uint64_t> done;
  std::set<Int> counterexamples;

  std::uint64_t chunk_count() const;
  /// [begin, end) of chunk i.
  std::pair<Int, Int> chunk_range(std::uint64_t i) const;
  /// Largest v such that every n in [lo, v) lies in a completed chunk.
  Int verified_prefix() const;
  bool complete() const { return done.size() == chunk_count(); }

  std::string serialize() const;
  /// Throws CorruptCheckpoint on malformed text or violated invariants.
  static Checkpoint parse(const std::string& text);

  /// Writes to a sibling temp file and renames it over `path`.
  void write_atomic(const std::filesystem::path& path) const;
  /// Throws CorruptCheckpoint, or std::runtime_error if the file cannot be read.
  static Checkpoint read(const std::filesystem::path& path);
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace foursq
