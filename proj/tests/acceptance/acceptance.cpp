// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Time limits below are wall-clock seconds on the
// machine running the suite.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foursq/constructive.hpp"
#include "foursq/quad_enum.hpp"
#include "foursq/scanner.hpp"
#include "foursq/ternary.hpp"

namespace {

using namespace foursq;
using Clock = std::chrono::steady_clock;

constexpr double kCatalogLimitS = 300.0;
constexpr double kDisjointLimitS = 10.0;
constexpr double kOneThreeFiveLimitS = 600.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failed = 0;

void report(const char* name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++g_failed;
  std::printf("%s  %-26s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), s);
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<Int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

// Marks every a x^2 + b y^2 + c z^2 <= bound with x, y, z >= 0.
std::vector<char> ternary_sieve(const TernaryForm& f, Int bound) {
  std::vector<char> hit(static_cast<std::size_t>(bound) + 1, 0);
  for (Int x = 0; f.a * x * x <= bound; ++x)
    for (Int y = 0; f.a * x * x + f.b * y * y <= bound; ++y)
      for (Int z = 0; f.value(x, y, z) <= bound; ++z) hit[static_cast<std::size_t>(f.value(x, y, z))] = 1;
  return hit;
}

Outcome exception_catalog_equivalence() {
  constexpr Int kBound = 100000;
  const auto t0 = Clock::now();
  int forms = 0;
  std::uint64_t mismatches = 0;
  for (const auto& rule : exception_catalog()) {
    if (rule.one_sided) continue;
    ++forms;
    const auto hit = ternary_sieve(rule.form, kBound);
    for (Int n = 0; n <= kBound; ++n) {
      if (rule.even_only && n % 2 != 0) continue;
      const bool member = exception_membership(rule.form, n) == Membership::Member;
      if (member == static_cast<bool>(hit[static_cast<std::size_t>(n)])) ++mismatches;
    }
  }
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << forms << " forms, n <= " << kBound << ", " << mismatches << " mismatches";
  return {forms == 9 && mismatches == 0 && s < kCatalogLimitS, d.str()};
}

Outcome disjointness() {
  const auto t0 = Clock::now();
  const auto v = pairwise_disjoint(1000000);
  const double s = seconds_since(t0);
  return {v.empty() && s < kDisjointLimitS,
          "six sets, n <= 10^6, " + std::to_string(v.size()) + " violations"};
}

Outcome linear_biconditionals() {
  const auto sum_n = parse_constraint("x+y-z ~ zero [N]");
  const auto half_z = parse_constraint("x+y-2z ~ zero [Z]");
  std::vector<Int> bad;
  for (Int n = 0; n <= 10000; ++n) {
    const bool a = find_constrained(n, sum_n).has_value();
    const bool b = find_constrained(n, half_z).has_value();
    if (a == in_E126(n) || b == in_E123(n)) bad.push_back(n);
  }
  return {bad.empty(), "n <= 10^4, " + std::to_string(bad.size()) + " violations"};
}

Outcome constructive_soundness() {
  std::uint64_t failures = 0;
  std::uint64_t missing = 0;
  std::string first;
  const auto families = unconditional_families();
  for (const auto& f : families) {
    const auto r = batch_validate(f, 10000);
    failures += r.failures.size();
    const auto m = r.missing_branches(f);
    missing += m.size();
    if (first.empty() && !r.failures.empty()) first = "; first: " + r.failures.front().reason;
    if (first.empty() && !m.empty()) first = "; first: " + f.to_string() + " never took " + m.front();
  }
  std::ostringstream d;
  d << families.size() << " families, n <= 10^4, " << failures << " failures, " << missing
    << " unhit branches" << first;
  return {failures == 0 && missing == 0, d.str()};
}

Outcome identity_grids() {
  const auto sq = parse_polynomial("x^2y^2+y^2z^2+z^2x^2");
  const auto q8 = parse_polynomial("x^4+8y^3z+8yz^3");
  const auto q16 = parse_polynomial("x^4+16y^3z+64yz^3");
  const auto p = parse_polynomial("x+4y+4z");
  const auto q = parse_polynomial("9x+3y+3z");
  std::uint64_t bad = 0;
  std::uint64_t checks = 0;
  auto expect = [&](Wide lhs, Wide rhs) {
    ++checks;
    if (lhs != rhs) ++bad;
  };
  for (Int u = 0; u <= 100; ++u) {
    for (Int v = 0; v <= 100; ++v) {
      // z = x + y with (x, y) = (u, v).
      const std::array<Int, kVarCount> a{u, v, u + v, 0};
      const Wide s = Wide{u} * u + Wide{u} * v + Wide{v} * v;
      expect(sq.eval(a), s * s);
      // x + z = y with (y, z) = (u, v).
      const std::array<Int, kVarCount> b{u - v, u, v, 0};
      const Wide yz = u + v;
      expect(q8.eval(b), yz * yz * yz * yz);
      // x = |y - 2z| with (y, z) = (u, v).
      const std::array<Int, kVarCount> c{std::abs(u - 2 * v), u, v, 0};
      const Wide y2z = u + 2 * v;
      expect(q16.eval(c), y2z * y2z * y2z * y2z);
      // x = y + z with (y, z) = (u, v).
      const std::array<Int, kVarCount> e{u + v, u, v, 0};
      const Wide pv = p.eval(e);
      const Wide qv = q.eval(e);
      const Wide h = 13 * Wide{u + v};
      expect(pv * pv + qv * qv, h * h);
    }
  }
  return {bad == 0 && checks == 4 * 101 * 101,
          "4 identities x 101^2 points, " + std::to_string(bad) + " violations"};
}

Outcome one_three_five() {
  const auto t0 = Clock::now();
  ScanConfig main;
  main.spec = parse_constraint("x+3y+5z ~ square [N]");
  main.lo = 0;
  main.hi = 1000000;
  const auto a = scan(main);
  const double s = seconds_since(t0);
  const auto b = scan(family_config(find_named_family("three_five_six"), 100000));
  std::ostringstream d;
  d << "x+3y+5z on [0,10^6): " << a.counterexamples.size() << " counterexamples; "
    << "3x+5y+6z on [16,10^5): " << b.counterexamples.size() << " counterexamples";
  return {a.complete && b.complete && a.counterexamples.empty() && b.counterexamples.empty() &&
              b.lo == 16 && s < kOneThreeFiveLimitS,
          d.str()};
}

Outcome known_counterexamples() {
  auto run = [](const char* spec, Int hi) {
    ScanConfig c;
    c.spec = parse_constraint(spec);
    c.hi = hi;
    return scan(c).counterexamples;
  };
  const auto seven = run("x+7y ~ square [N]", 100000);
  const auto cube = run("x-y ~ cube [N]", 10000);
  const auto three = run("3x-y ~ square [N]", 10000);
  const bool three_ok = std::all_of(three.begin(), three.end(), [](Int n) { return n <= 3; });
  return {seven == std::vector<Int>{47} && cube == std::vector<Int>{56, 3584} && three_ok,
          "x+7y " + join(seven) + ", x-y cube " + join(cube) + ", 3x-y " + join(three)};
}

Outcome hypothesis_sweeps() {
  const auto r = verify_hypothesis(Hypothesis::Ramanujan11_10, 1000000);
  const auto above = std::count_if(r.begin(), r.end(), [](Int n) { return n > 2719; });
  const auto c = verify_hypothesis(Hypothesis::Containment1_4, 100000);
  const auto t = verify_hypothesis(Hypothesis::Thm13iiiForm, 10000);
  std::ostringstream d;
  d << "odd x^2+y^2+10z^2 exceptions to 10^6: " << r.size() << " (max "
    << (r.empty() ? 0 : r.back()) << "), containment " << c.size() << ", 7-divisibility form "
    << t.size();
  return {above == 0 && c.empty() && t.empty(), d.str()};
}

ScanOptions with_workers(unsigned n) {
  ScanOptions o;
  o.workers = n;
  return o;
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "foursq_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  bool ok = true;
  std::string detail;
  for (const char* text : {"x+7y ~ square [N]", "x+3y+5z ~ square [N]", "x-y ~ cube [N]"}) {
    ScanConfig c;
    c.spec = parse_constraint(text);
    c.hi = 60000;
    c.chunk = 4000;
    const std::string one = scan(c, {}, with_workers(1)).to_json();

    const fs::path path = dir / "d.ckpt";
    fs::remove(path);
    ScanOptions partial = with_workers(4);
    partial.max_chunks = 6;
    const auto first = scan(c, path, partial);
    const std::string resumed = resume(path, with_workers(3)).to_json();
    const bool same = !first.complete && one == resumed;
    ok = ok && same;
    detail += std::string(detail.empty() ? "" : ", ") + (same ? "identical" : "DIFFERENT");
  }
  fs::remove_all(dir);
  return {ok, "3 scans, 1 worker vs 4 workers interrupted and resumed on 3: " + detail};
}

// Independent oracle: w outermost, then one fewer square recursively.
void oracle(Int n, int left, std::array<Int, 4>& cur, std::vector<std::array<Int, 4>>& out) {
  if (left == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (Int v = 0; v * v <= n; ++v) {
    cur[static_cast<std::size_t>(left - 1)] = v;
    oracle(n - v * v, left - 1, cur, out);
  }
}

Outcome oracle_equivalence() {
  std::vector<Int> bad;
  std::uint64_t total = 0;
  for (Int n = 0; n <= 2000; ++n) {
    std::vector<std::array<Int, 4>> want;
    std::array<Int, 4> cur{};
    oracle(n, 4, cur, want);
    std::vector<std::array<Int, 4>> got;
    for (const auto& r : enumerate_four_squares(n)) got.push_back(r.coords());
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    total += got.size();
    if (want != got) bad.push_back(n);
  }
  return {bad.empty(), "n <= 2000, " + std::to_string(total) + " representations, " +
                           std::to_string(bad.size()) + " mismatching n"};
}

}  // namespace

int main() {
  report("exception-catalog", exception_catalog_equivalence);
  report("exception-disjointness", disjointness);
  report("linear-biconditionals", linear_biconditionals);
  report("constructive-soundness", constructive_soundness);
  report("identity-grids", identity_grids);
  report("one-three-five-scan", one_three_five);
  report("known-counterexamples", known_counterexamples);
  report("hypothesis-sweeps", hypothesis_sweeps);
  report("scan-determinism", determinism);
  report("enumeration-oracle", oracle_equivalence);
  std::printf("%d of 10 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
