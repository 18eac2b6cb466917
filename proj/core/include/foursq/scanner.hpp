#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foursq/constraint.hpp"

namespace foursq {

/// n = base^(step*k + offset) * factor for some k >= 0; step 0 means a constant.
struct ExclusionTemplate {
  Int base = 2;
  int step = 0;
  int offset = 0;
  Int factor = 1;

  bool matches(Int n) const;
  std::string to_string() const;

  friend bool operator==(const ExclusionTemplate&, const ExclusionTemplate&) = default;
};

/// Union of templates.
class Exclusion {
 public:
  Exclusion() = default;
  /// Comma-separated list of "B^(Ak+C)*M", "B^(Ak)", or plain integers.
  /// Empty text or "none" excludes nothing. Throws SyntaxError.
  static Exclusion parse(std::string_view text);

  bool excludes(Int n) const;
  bool empty() const { return templates_.empty(); }
  const std::vector<ExclusionTemplate>& templates() const { return templates_; }
  std::string to_string() const;

  friend bool operator==(const Exclusion&, const Exclusion&) = default;

 private:
  std::vector<ExclusionTemplate> templates_;
};

struct ScanConfig {
  ConstraintSpec spec;
  Int lo = 0;
  Int hi = 0;  ///< exclusive
  Int chunk = 10000;
  Exclusion exclusion;

  /// Throws std::invalid_argument unless 0 <= lo <= hi and chunk >= 1, and
  /// OverflowError past the cap.
  void validate() const;
  /// Digest over the canonical spec text, range, chunk and exclusions.
  std::uint64_t digest() const;
};

struct ScanOptions {
  unsigned workers = 0;  ///< 0: hardware concurrency
  /// Stop after this many chunks complete in this call (simulated interruption).
  std::optional<std::uint64_t> max_chunks;
  /// Polled between chunks; set it to stop early.
  const std::atomic<bool>* cancel = nullptr;
  /// Called from the writer thread after each checkpoint flush.
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

struct ScanSample {
  Int n = 0;
  std::array<Int, kVarCount> coords{};
  std::string witness;
};

struct ScanReport {
  std::string spec;
  Int lo = 0;
  Int hi = 0;
  Int chunk = 0;
  std::string exclusion;
  std::uint64_t checked = 0;   ///< decided, non-excluded n
  std::uint64_t excluded = 0;  ///< excluded n inside completed chunks
  std::vector<Int> counterexamples;
  std::vector<ScanSample> samples;  ///< first witness at or after each decile start
  std::uint64_t chunks_total = 0;
  std::uint64_t chunks_done = 0;
  Int verified_prefix = 0;
  bool complete = false;
  double elapsed_ms = 0;

  /// JSON with a fixed key order. elapsed_ms is included only on request
  /// because it breaks byte-identical output.
  std::string to_json(bool with_timing = false) const;
};

/// Scans the range, persisting progress to `checkpoint` when it is non-empty.
/// An existing checkpoint for the same config is resumed; one for another
/// config throws CheckpointMismatch.
ScanReport scan(const ScanConfig& config, const std::filesystem::path& checkpoint = {},
                const ScanOptions& options = {});

/// Continues the scan recorded in `checkpoint`. Throws CheckpointMismatch if the
/// recorded config no longer hashes to the recorded digest, CorruptCheckpoint
/// on malformed files.
ScanReport resume(const std::filesystem::path& checkpoint, const ScanOptions& options = {});

/// A conjecture preset: spec, first admissible n and exclusion template.
struct NamedFamily {
  std::string_view name;
  std::string_view spec;
  Int lo = 0;
  std::string_view exclusion;
  std::string_view summary;
};

const std::vector<NamedFamily>& named_families();
/// Throws std::invalid_argument for unknown names.
const NamedFamily& find_named_family(std::string_view name);
/// Config for a preset over [family.lo, hi).
ScanConfig family_config(const NamedFamily& family, Int hi, Int chunk = 10000);

/// Numeric hypotheses some constructions rely on.
enum class Hypothesis {
  Ramanujan11_10,  ///< odd n not of the form x^2+y^2+10z^2
  Thm13iiiForm,    ///< n >= 1190, 16 not dividing n, not x^2+10y^2+(2z^2+125r^4)/7, r <= 3
  Containment1_4,  ///< n = 8q+5 not of the form x^2+y^2+13z^2
};

/// "ramanujan_1_1_10", "thm13iii_form", "containment_1_4".
std::string_view to_string(Hypothesis h);
/// Throws std::invalid_argument for unknown names.
Hypothesis parse_hypothesis(std::string_view name);

/// Every n <= bound violating the hypothesis, ascending.
std::vector<Int> verify_hypothesis(Hypothesis h, Int bound);

}  // namespace foursq
