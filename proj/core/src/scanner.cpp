#include "foursq/scanner.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <regex>
#include <thread>

#include <json.hpp>

#include "foursq/checkpoint.hpp"
#include "foursq/errors.hpp"
#include "foursq/quad_enum.hpp"

namespace foursq {

bool ExclusionTemplate::matches(Int n) const {
  if (n <= 0 || n % factor != 0) return false;
  Int q = n / factor;
  int e = 0;
  while (q % base == 0) {
    q /= base;
    ++e;
  }
  if (q != 1 || e < offset) return false;
  return step == 0 ? e == offset : (e - offset) % step == 0;
}

std::string ExclusionTemplate::to_string() const {
  if (step == 0 && offset == 0) return std::to_string(factor);
  std::string exp = step == 0 ? std::to_string(offset)
                              : "(" + std::to_string(step) + "k" +
                                    (offset ? "+" + std::to_string(offset) : "") + ")";
  std::string s = std::to_string(base) + "^" + exp;
  if (factor != 1) s += "*" + std::to_string(factor);
  return s;
}

Exclusion Exclusion::parse(std::string_view text) {
  Exclusion out;
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  if (s.empty() || s == "none") return out;
  static const std::regex kTemplate(R"((\d+)\^\((\d+)k(?:\+(\d+))?\)(?:\*(\d+))?)");
  static const std::regex kConstant(R"(\d+)");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::smatch m;
    ExclusionTemplate t;
    try {
      if (std::regex_match(item, m, kTemplate)) {
        t.base = std::stoll(m[1]);
        t.step = std::stoi(m[2]);
        t.offset = m[3].matched ? std::stoi(m[3]) : 0;
        t.factor = m[4].matched ? std::stoll(m[4]) : 1;
        if (t.base < 2 || t.step < 1 || t.factor < 1) throw SyntaxError("degenerate exclusion template", pos);
      } else if (std::regex_match(item, kConstant)) {
        t.factor = std::stoll(item);
      } else {
        throw SyntaxError("bad exclusion template '" + item + "'", pos);
      }
    } catch (const std::out_of_range&) {
      throw SyntaxError("exclusion constant out of range", pos);
    }
    out.templates_.push_back(t);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool Exclusion::excludes(Int n) const {
  return std::any_of(templates_.begin(), templates_.end(),
                     [n](const ExclusionTemplate& t) { return t.matches(n); });
}

std::string Exclusion::to_string() const {
  std::string s;
  for (const auto& t : templates_) {
    if (!s.empty()) s += ",";
    s += t.to_string();
  }
  return s;
}

void ScanConfig::validate() const {
  if (lo < 0 || hi < lo) throw std::invalid_argument("scan range must satisfy 0 <= lo <= hi");
  if (chunk < 1) throw std::invalid_argument("chunk size must be >= 1");
  require_in_cap(hi);
}

std::uint64_t ScanConfig::digest() const {
  const std::string canon = spec.to_string() + "\n" + std::to_string(lo) + "\n" + std::to_string(hi) +
                            "\n" + std::to_string(chunk) + "\n" + exclusion.to_string();
  return fnv1a(canon);
}

std::string ScanReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["spec"] = spec;
  j["range"] = {lo, hi};
  j["chunk"] = chunk;
  j["exclusion"] = exclusion;
  j["checked"] = checked;
  j["excluded"] = excluded;
  j["counterexamples"] = counterexamples;
  auto samples_json = nlohmann::ordered_json::array();
  for (const auto& s : samples) {
    samples_json.push_back({{"n", s.n}, {"rep", s.coords}, {"witness", s.witness}});
  }
  j["samples"] = std::move(samples_json);
  j["chunks"] = {{"total", chunks_total}, {"done", chunks_done}};
  j["verified_prefix"] = verified_prefix;
  j["complete"] = complete;
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

namespace {

struct ChunkResult {
  std::uint64_t index = 0;
  std::vector<Int> counterexamples;
};

Checkpoint fresh_checkpoint(const ScanConfig& config) {
  Checkpoint cp;
  cp.digest = config.digest();
  cp.lo = config.lo;
  cp.hi = config.hi;
  cp.chunk = config.chunk;
  cp.spec_text = config.spec.to_string();
  cp.exclusion_text = config.exclusion.to_string();
  return cp;
}

ChunkResult run_chunk(const ScanConfig& config, const Checkpoint& cp, std::uint64_t index,
                      const std::atomic<bool>& stop) {
  ChunkResult r{index, {}};
  const auto [begin, end] = cp.chunk_range(index);
  for (Int n = begin; n < end; ++n) {
    if ((n & 0xff) == 0 && stop.load(std::memory_order_relaxed)) break;
    if (config.exclusion.excludes(n)) continue;
    if (!find_constrained(n, config.spec)) r.counterexamples.push_back(n);
  }
  return r;
}

ScanReport finish(const ScanConfig& config, const Checkpoint& cp, double elapsed_ms) {
  ScanReport rep;
  rep.spec = cp.spec_text;
  rep.lo = cp.lo;
  rep.hi = cp.hi;
  rep.chunk = cp.chunk;
  rep.exclusion = cp.exclusion_text;
  rep.counterexamples.assign(cp.counterexamples.begin(), cp.counterexamples.end());
  rep.chunks_total = cp.chunk_count();
  rep.chunks_done = cp.done.size();
  rep.verified_prefix = cp.verified_prefix();
  rep.complete = cp.complete();
  rep.elapsed_ms = elapsed_ms;
  for (auto i : cp.done) {
    const auto [begin, end] = cp.chunk_range(i);
    std::uint64_t excl = 0;
    if (!config.exclusion.empty()) {
      for (Int n = begin; n < end; ++n) excl += config.exclusion.excludes(n);
    }
    rep.excluded += excl;
    rep.checked += static_cast<std::uint64_t>(end - begin) - excl;
  }
  // Samples only come from the verified prefix so partial reports stay a prefix
  // of the complete one.
  const Int limit = rep.verified_prefix;
  Int last = -1;
  for (int d = 0; d < 10; ++d) {
    const Int start = cp.lo + static_cast<Int>((static_cast<Wide>(cp.hi - cp.lo) * d) / 10);
    for (Int n = std::max(start, last + 1); n < limit; ++n) {
      if (config.exclusion.excludes(n) || cp.counterexamples.count(n)) continue;
      const auto found = find_constrained(n, config.spec);
      if (!found) continue;
      rep.samples.push_back({n, found->rep.coords(), describe(found->witness, config.spec)});
      last = n;
      break;
    }
  }
  return rep;
}

ScanReport run(const ScanConfig& config, Checkpoint cp, const std::filesystem::path& path,
               const ScanOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> pending;
  for (std::uint64_t i = 0; i < cp.chunk_count(); ++i) {
    if (!cp.done.count(i)) pending.push_back(i);
  }
  if (!path.empty()) cp.write_atomic(path);

  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, pending.size()));
  const std::uint64_t budget = options.max_chunks.value_or(pending.size());

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv;
  std::deque<ChunkResult> results;
  std::exception_ptr error;
  unsigned running = workers;

  auto cancelled = [&] { return options.cancel && options.cancel->load(); };
  auto worker = [&] {
    try {
      while (!stop.load() && !cancelled()) {
        const std::size_t k = next.fetch_add(1);
        if (k >= pending.size()) break;
        ChunkResult r = run_chunk(config, cp, pending[k], stop);
        if (stop.load() || cancelled()) break;  // partial chunk: discard
        std::lock_guard lock(mu);
        results.push_back(std::move(r));
        cv.notify_one();
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      stop = true;
    }
    std::lock_guard lock(mu);
    --running;
    cv.notify_one();
  };

  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) threads.emplace_back(worker);

  std::uint64_t recorded = 0;
  const std::uint64_t total = cp.chunk_count();
  std::unique_lock lock(mu);
  while (true) {
    cv.wait(lock, [&] { return !results.empty() || running == 0; });
    if (results.empty() && running == 0) break;
    ChunkResult r = std::move(results.front());
    results.pop_front();
    if (recorded >= budget || error) continue;
    lock.unlock();
    cp.done.insert(r.index);
    cp.counterexamples.insert(r.counterexamples.begin(), r.counterexamples.end());
    if (!path.empty()) cp.write_atomic(path);
    if (++recorded >= budget) stop = true;
    if (options.progress) options.progress(cp.done.size(), total);
    lock.lock();
  }
  lock.unlock();
  threads.clear();
  if (error) std::rethrow_exception(error);

  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return finish(config, cp, ms);
}

}  // namespace

ScanReport scan(const ScanConfig& config, const std::filesystem::path& checkpoint,
                const ScanOptions& options) {
  config.validate();
  Checkpoint cp = fresh_checkpoint(config);
  if (!checkpoint.empty() && std::filesystem::exists(checkpoint)) {
    Checkpoint old = Checkpoint::read(checkpoint);
    if (old.digest != cp.digest) {
      throw CheckpointMismatch("checkpoint " + checkpoint.string() + " belongs to a different scan");
    }
    cp = std::move(old);
  }
  return run(config, std::move(cp), checkpoint, options);
}

ScanReport resume(const std::filesystem::path& checkpoint, const ScanOptions& options) {
  Checkpoint cp = Checkpoint::read(checkpoint);
  ScanConfig config;
  try {
    config.spec = parse_constraint(cp.spec_text);
    config.exclusion = Exclusion::parse(cp.exclusion_text);
  } catch (const SyntaxError& e) {
    throw CorruptCheckpoint(std::string("checkpoint config does not parse: ") + e.what());
  } catch (const DegreeError& e) {
    throw CorruptCheckpoint(std::string("checkpoint config does not parse: ") + e.what());
  }
  config.lo = cp.lo;
  config.hi = cp.hi;
  config.chunk = cp.chunk;
  if (config.digest() != cp.digest) {
    throw CheckpointMismatch("checkpoint config does not match its digest");
  }
  config.validate();
  return run(config, std::move(cp), checkpoint, options);
}

ScanConfig family_config(const NamedFamily& family, Int hi, Int chunk) {
  ScanConfig c;
  c.spec = parse_constraint(family.spec);
  c.lo = std::min(family.lo, hi);
  c.hi = hi;
  c.chunk = chunk;
  c.exclusion = Exclusion::parse(family.exclusion);
  return c;
}

}  // namespace foursq
