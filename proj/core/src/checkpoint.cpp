#include "foursq/checkpoint.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "foursq/errors.hpp"

namespace foursq {

namespace {

template <class T>
T parse_number(std::string_view text, int base, std::size_t line) {
  T v{};
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw CorruptCheckpoint("bad number '" + std::string(text) + "' on line " + std::to_string(line));
  }
  return v;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Checkpoint::chunk_count() const {
  if (hi <= lo) return 0;
  return static_cast<std::uint64_t>((hi - lo + chunk - 1) / chunk);
}

std::pair<Int, Int> Checkpoint::chunk_range(std::uint64_t i) const {
  const Int begin = lo + static_cast<Int>(i) * chunk;
  return {begin, std::min(hi, begin + chunk)};
}

Int Checkpoint::verified_prefix() const {
  std::uint64_t i = 0;
  for (auto d : done) {
    if (d != i) break;
    ++i;
  }
  return i == 0 ? lo : chunk_range(i - 1).second;
}

std::string Checkpoint::serialize() const {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
  std::ostringstream out;
  out << "header " << hex << ' ' << lo << ' ' << hi << ' ' << chunk << '\n';
  out << "spec " << spec_text << '\n';
  out << "exclude " << (exclusion_text.empty() ? "none" : exclusion_text) << '\n';
  out << "prefix " << verified_prefix() << '\n';
  for (auto d : done) out << "done " << d << '\n';
  for (auto n : counterexamples) out << "cex " << n << '\n';
  return out.str();
}

Checkpoint Checkpoint::parse(const std::string& text) {
  Checkpoint cp;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  bool have_spec = false;
  bool have_exclude = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    const std::string tag = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (tag == "header") {
      std::istringstream fields(rest);
      std::string digest, lo, hi, chunk, extra;
      if (!(fields >> digest >> lo >> hi >> chunk) || (fields >> extra)) {
        throw CorruptCheckpoint("malformed header on line " + std::to_string(lineno));
      }
      cp.digest = parse_number<std::uint64_t>(digest, 16, lineno);
      cp.lo = parse_number<Int>(lo, 10, lineno);
      cp.hi = parse_number<Int>(hi, 10, lineno);
      cp.chunk = parse_number<Int>(chunk, 10, lineno);
      have_header = true;
    } else if (tag == "spec") {
      cp.spec_text = rest;
      have_spec = true;
    } else if (tag == "exclude") {
      cp.exclusion_text = rest == "none" ? "" : rest;
      have_exclude = true;
    } else if (tag == "prefix") {
      parse_number<Int>(rest, 10, lineno);  // derived; recomputed from done lines
    } else if (tag == "done") {
      cp.done.insert(parse_number<std::uint64_t>(rest, 10, lineno));
    } else if (tag == "cex") {
      cp.counterexamples.insert(parse_number<Int>(rest, 10, lineno));
    } else {
      throw CorruptCheckpoint("unknown record '" + tag + "' on line " + std::to_string(lineno));
    }
  }
  if (!have_header || !have_spec || !have_exclude) {
    throw CorruptCheckpoint("checkpoint is missing its header, spec or exclude record");
  }
  if (cp.lo < 0 || cp.hi < cp.lo || cp.chunk < 1) {
    throw CorruptCheckpoint("checkpoint range or chunk size is invalid");
  }
  const auto count = cp.chunk_count();
  if (!cp.done.empty() && *cp.done.rbegin() >= count) {
    throw CorruptCheckpoint("done record past the last chunk");
  }
  for (Int n : cp.counterexamples) {
    if (n < cp.lo || n >= cp.hi ||
        !cp.done.count(static_cast<std::uint64_t>((n - cp.lo) / cp.chunk))) {
      throw CorruptCheckpoint("counterexample " + std::to_string(n) + " outside completed chunks");
    }
  }
  return cp;
}

void Checkpoint::write_atomic(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << serialize();
    out.flush();
    if (!out) throw std::runtime_error("short write to checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint Checkpoint::read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace foursq
