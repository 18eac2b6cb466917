#include "foursq/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "foursq/errors.hpp"

namespace foursq {

std::vector<SequenceRow> generate(const SequenceDef& def, Int lo, Int hi, unsigned workers) {
  require_in_cap(std::max<Int>(hi, 0));
  const Int start = std::max({lo, def.offset, Int{0}});
  if (hi <= start) return {};
  const auto count = static_cast<std::size_t>(hi - start);
  std::vector<SequenceRow> rows(count);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto work = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        const Int n = start + static_cast<Int>(i);
        rows[i] = {n, count_constrained(n, def.spec, def.dedup)};
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

std::size_t emit_bfile(const std::vector<SequenceRow>& rows, std::ostream& sink) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].first != rows[i - 1].first + 1) {
      throw NonContiguousRows("row " + std::to_string(rows[i].first) + " does not follow " +
                              std::to_string(rows[i - 1].first));
    }
  }
  std::size_t bytes = 0;
  for (const auto& [n, a] : rows) {
    const std::string line = std::to_string(n) + " " + std::to_string(a) + "\n";
    sink << line;
    bytes += line.size();
  }
  return bytes;
}

SequenceDef CatalogEntry::def() const { return {parse_constraint(spec_text), dedup, offset}; }

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> tokens;
    std::istringstream words(line);
    for (std::string w; words >> w;) tokens.push_back(w);
    CatalogEntry e;
    if (!tokens.empty() && (tokens.back() == "verified" || tokens.back() == "unverified")) {
      e.verified = tokens.back() == "verified";
      tokens.pop_back();
    }
    if (tokens.size() < 4) throw SyntaxError("catalog entry needs id, spec, dedup and offset", lineno);
    e.id = tokens.front();
    try {
      std::size_t used = 0;
      e.offset = std::stoll(tokens.back(), &used);
      if (used != tokens.back().size()) throw std::invalid_argument("offset");
    } catch (const std::logic_error&) {
      throw SyntaxError("bad catalog offset '" + tokens.back() + "'", lineno);
    }
    try {
      e.dedup = DedupRule::parse(tokens[tokens.size() - 2]);
    } catch (const Error& err) {
      throw SyntaxError(std::string("bad catalog dedup: ") + err.what(), lineno);
    } catch (const std::invalid_argument& err) {
      throw SyntaxError(std::string("bad catalog dedup: ") + err.what(), lineno);
    }
    for (std::size_t i = 1; i + 2 < tokens.size(); ++i) {
      if (i > 1) e.spec_text += ' ';
      e.spec_text += tokens[i];
    }
    try {
      parse_constraint(e.spec_text);
    } catch (const Error& err) {
      throw SyntaxError(std::string("bad catalog spec: ") + err.what(), lineno);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("FOURSQ_CATALOG"); env && *env) return env;
  const std::filesystem::path installed = FOURSQ_INSTALLED_CATALOG;
  if (std::filesystem::exists(installed)) return installed;
  return FOURSQ_SOURCE_CATALOG;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view id) {
  for (const auto& e : catalog) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown sequence: " + std::string(id));
}

}  // namespace foursq
