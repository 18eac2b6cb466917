#include "foursq/constructive.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "family_tables.hpp"
#include "foursq/errors.hpp"

namespace foursq {

namespace {

using Id = TheoremFamily::Id;

struct IdName {
  Id id;
  std::string_view name;
};

constexpr IdName kIdNames[] = {
    {Id::T11, "t11"},     {Id::T12i, "t12i"},     {Id::T12ii, "t12ii"},   {Id::T12iii, "t12iii"},
    {Id::T12iv, "t12iv"}, {Id::T12v, "t12v"},     {Id::T13i, "t13i"},     {Id::T13ii, "t13ii"},
    {Id::T13iii, "t13iii"}, {Id::T14i, "t14i"},   {Id::T14ii, "t14ii"},   {Id::T14iii, "t14iii"},
    {Id::T14iv, "t14iv"}, {Id::T14v, "t14v"},     {Id::T14vi, "t14vi"},   {Id::T15, "t15"},
};

std::string_view id_name(Id id) {
  for (const auto& e : kIdNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

bool in_s(int c, int d, int m) {
  static constexpr std::pair<int, int> kS3[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 4}};
  for (auto [sc, sd] : kS3) {
    if (sc == c && sd == d) return true;
  }
  return m == 2 && c == 2 && (d == 3 || d == 6);
}

template <std::size_t N, class Entry>
int table_index(const std::array<Entry, N>& table, std::string_view poly, const char* family) {
  const Polynomial want = parse_polynomial(poly);
  for (std::size_t i = 0; i < N; ++i) {
    if (parse_polynomial(table[i].poly) == want) return static_cast<int>(i);
  }
  bad(std::string(family) + ": polynomial not in the theorem's list: " + std::string(poly));
}

// Power class spelling d*power<m> with the conventional names for d = 1.
std::string power_text(int d, int m) {
  std::string base = m == 2 ? "square" : m == 3 ? "cube" : "power" + std::to_string(m);
  return d == 1 ? base : std::to_string(d) + "*" + base;
}

std::string spec_text(const TheoremFamily& f) {
  switch (f.id) {
    case Id::T12i: return f.a == 1 ? "x-y ~ square [N]" : "2x-2y ~ square [N]";
    case Id::T12ii: return "x+y ~ " + power_text(f.c, 3) + " [Z]";
    case Id::T12iii: return "x+2y ~ " + power_text(f.d, f.m) + " [Z]";
    case Id::T12iv: return "(x+z)(y+w) ~ square [Z]";
    case Id::T13i: {
      const std::string lhs = f.c == 1 ? "x+y+z" : "x+y+" + std::to_string(f.c) + "z";
      return lhs + " ~ " + power_text(f.d, f.m) + " [Z]";
    }
    case Id::T13ii: return "x+3y ~ square [Z]";
    case Id::T13iii: return "x+3y+5z ~ square [Z]";
    case Id::T14i:
      return std::string(detail::kProducts.at(static_cast<std::size_t>(f.index)).poly) +
             " ~ zero [N]";
    case Id::T14ii: return "(2x-3y)(x+y-z) ~ zero [N]";
    case Id::T14iii: return "(x-y)z ~ square [N; z>0]";
    case Id::T14iv: return "legs(x+4y+4z, 9x+3y+3z) [N; y>0]";
    case Id::T14v:
      return f.variant == 1 ? "x^2y^2+y^2z^2+z^2x^2 ~ square [x,y,z in N; w in Z+]"
                            : "x^2y^2+4y^2z^2+4z^2x^2 ~ square [x,y,z in Z; w in Z+]";
    case Id::T14vi:
      return f.variant == 1 ? "x^4+8y^3z+8yz^3 ~ power4 [x,y,z in N; w in Z+]"
                            : "x^4+16y^3z+64yz^3 ~ power4 [x,y,z in N; w in Z+]";
    case Id::T15: {
      const auto& e = detail::kQuadratics.at(static_cast<std::size_t>(f.index));
      return std::string(e.poly) + " ~ " + std::string(e.target) + " [N]";
    }
    case Id::T11:
    case Id::T12v: break;
  }
  throw std::logic_error(f.to_string() + " has no four-square constraint");
}

// Branches each family's procedure can take for some admissible n. Names match
// the labels pushed by detail::build.
std::vector<std::string> branch_table(const TheoremFamily& f) {
  switch (f.id) {
    case Id::T11: {
      std::vector<std::string> b{"descent", "base", "three_square", "x1"};
      if (f.a == 1 && (f.m == 5 || f.m == 6)) b.emplace_back("x2_k2");
      if (f.m == 5) b.emplace_back("x2_k34");
      return b;
    }
    case Id::T12i: return {"descent", "base", "equal", "shift"};
    case Id::T12ii: {
      // For c = 4, 2n - 16 is never in E(1,1,1) when 2n is and 64 does not divide n.
      std::vector<std::string> b{"descent", "base", "delta0", "delta1"};
      if (f.c != 4) b.emplace_back("delta8");
      return b;
    }
    case Id::T12iii: {
      // TODO: delta2m is unreached for n <= 10^6 except at d=1, m=3; find the residue argument.
      std::vector<std::string> b{"descent", "base", "delta0", "delta1"};
      if (f.d == 1 && f.m == 3) b.emplace_back("delta2m");
      return b;
    }
    case Id::T12iv: return {"descent", "base", "odd", "twice_odd"};
    case Id::T12v: return {"descent", "base", "mod4_1", "mod4_23"};
    case Id::T13i: {
      std::vector<std::string> b{"descent", "base"};
      if (f.c == 1) {
        b.emplace_back("c1_delta0");
        if (f.d == 1) {
          b.emplace_back("c1_d1_delta1");
          // m = 2: 3n-1 and 3n-16 both in E(1,1,1) force 16 | n.
          if (f.m == 3) b.emplace_back("c1_d1_delta2m");
        } else {
          b.emplace_back("c1_d2");
        }
        return b;
      }
      b.emplace_back("c2_delta0");
      if (f.d == 3 || f.d == 6) {
        b.emplace_back("c2_d36");
      } else if (f.d == 1) {
        b.emplace_back("c2_d1_delta1");
        b.emplace_back("c2_d1_delta2m");
      } else if (f.d == 2) {
        b.emplace_back("c2_d2_delta1");
        // m = 2: 3n-2 and 3n-32 both in E(1,1,2) force 16 | n.
        if (f.m == 3) b.emplace_back("c2_d2_delta2m");
      } else {
        b.emplace_back("c2_d4");
      }
      return b;
    }
    case Id::T13ii: return {"descent", "base", "odd_small", "odd_large", "even", "even_16l6"};
    case Id::T13iii: return {"descent", "base", "r0", "r1", "r2", "r3"};
    case Id::T14i: {
      const auto& s = detail::kProducts.at(static_cast<std::size_t>(f.index)).strategies;
      return {std::string(detail::strategy_name(s[0])), std::string(detail::strategy_name(s[1]))};
    }
    case Id::T14ii: return {"x_plus_y_eq_z", "two_x_eq_3y"};
    case Id::T14iii: return {"twice_square", "x_eq_y", "x_eq_y_plus_z"};
    case Id::T14iv: return {"x_zero", "x_eq_y_plus_z"};
    case Id::T14v:
      return {"z_zero", f.variant == 1 ? "x_plus_y_eq_z" : "x_plus_y_eq_2z"};
    case Id::T14vi:
      return {"y_zero", f.variant == 1 ? "x_plus_z_eq_y" : "x_eq_abs_y_minus_2z"};
    case Id::T15: {
      const auto& s = detail::kQuadratics.at(static_cast<std::size_t>(f.index)).strategies;
      return {std::string(detail::strategy_name(s[0])), std::string(detail::strategy_name(s[1]))};
    }
  }
  return {};
}

int parse_int(std::string_view text, std::string_view key) {
  int v = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    bad("bad value for " + std::string(key) + ": " + std::string(text));
  }
  return v;
}

Int ipow(Int b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

std::string sq(Int v, int e) {
  const std::string s = v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v);
  return s + "^" + std::to_string(e);
}

}  // namespace

TheoremFamily TheoremFamily::t11(int a, int m) {
  if ((a != 1 && a != 4) || m < 4 || m > 6) bad("t11 requires a in {1,4} and m in {4,5,6}");
  TheoremFamily f;
  f.id = Id::T11;
  f.a = a;
  f.m = m;
  return f;
}

TheoremFamily TheoremFamily::t12i(int a) {
  if (a != 1 && a != 2) bad("t12i requires a in {1,2}");
  TheoremFamily f;
  f.id = Id::T12i;
  f.a = a;
  return f;
}

TheoremFamily TheoremFamily::t12ii(int c) {
  if (c != 1 && c != 2 && c != 4) bad("t12ii requires c in {1,2,4}");
  TheoremFamily f;
  f.id = Id::T12ii;
  f.c = c;
  return f;
}

TheoremFamily TheoremFamily::t12iii(int d, int m) {
  if ((d != 1 && d != 2) || (m != 2 && m != 3)) bad("t12iii requires d in {1,2} and m in {2,3}");
  TheoremFamily f;
  f.id = Id::T12iii;
  f.d = d;
  f.m = m;
  return f;
}

TheoremFamily TheoremFamily::t12iv() {
  TheoremFamily f;
  f.id = Id::T12iv;
  return f;
}

TheoremFamily TheoremFamily::t12v() {
  TheoremFamily f;
  f.id = Id::T12v;
  return f;
}

TheoremFamily TheoremFamily::t13i(int c, int d, int m) {
  if ((m != 2 && m != 3) || !in_s(c, d, m)) bad("t13i requires m in {2,3} and (c,d) in S(m)");
  TheoremFamily f;
  f.id = Id::T13i;
  f.c = c;
  f.d = d;
  f.m = m;
  return f;
}

TheoremFamily TheoremFamily::t13ii() {
  TheoremFamily f;
  f.id = Id::T13ii;
  return f;
}

TheoremFamily TheoremFamily::t13iii() {
  TheoremFamily f;
  f.id = Id::T13iii;
  return f;
}

TheoremFamily TheoremFamily::t14i(std::string_view poly) {
  TheoremFamily f;
  f.id = Id::T14i;
  f.index = table_index(detail::kProducts, poly, "t14i");
  return f;
}

TheoremFamily TheoremFamily::t14ii() {
  TheoremFamily f;
  f.id = Id::T14ii;
  return f;
}

TheoremFamily TheoremFamily::t14iii() {
  TheoremFamily f;
  f.id = Id::T14iii;
  return f;
}

TheoremFamily TheoremFamily::t14iv() {
  TheoremFamily f;
  f.id = Id::T14iv;
  return f;
}

TheoremFamily TheoremFamily::t14v(int variant) {
  if (variant != 1 && variant != 2) bad("t14v requires v in {1,2}");
  TheoremFamily f;
  f.id = Id::T14v;
  f.variant = variant;
  return f;
}

TheoremFamily TheoremFamily::t14vi(int variant) {
  if (variant != 1 && variant != 2) bad("t14vi requires v in {1,2}");
  TheoremFamily f;
  f.id = Id::T14vi;
  f.variant = variant;
  return f;
}

TheoremFamily TheoremFamily::t15(std::string_view poly) {
  TheoremFamily f;
  f.id = Id::T15;
  f.index = table_index(detail::kQuadratics, poly, "t15");
  return f;
}

TheoremFamily TheoremFamily::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  std::map<std::string, std::string, std::less<>> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    // "p=" consumes the remainder: polynomials never contain ','.
    while (!rest.empty()) {
      const auto eq = rest.find('=');
      if (eq == std::string_view::npos) bad("expected key=value in " + std::string(text));
      const std::string key(rest.substr(0, eq));
      rest.remove_prefix(eq + 1);
      const auto comma = rest.find(',');
      params[key] = std::string(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  std::size_t used = 0;
  auto get = [&](std::string_view key) -> int {
    const auto it = params.find(key);
    if (it == params.end()) bad("missing parameter " + std::string(key) + " in " + std::string(text));
    ++used;
    return parse_int(it->second, key);
  };
  auto get_poly = [&]() -> std::string {
    const auto it = params.find("p");
    if (it == params.end()) bad("missing parameter p in " + std::string(text));
    ++used;
    return it->second;
  };
  TheoremFamily f;
  if (name == "t11") {
    const int a = get("a");
    f = t11(a, get("m"));
  } else if (name == "t12i") {
    f = t12i(get("a"));
  } else if (name == "t12ii") {
    f = t12ii(get("c"));
  } else if (name == "t12iii") {
    const int d = get("d");
    f = t12iii(d, get("m"));
  } else if (name == "t12iv") {
    f = t12iv();
  } else if (name == "t12v") {
    f = t12v();
  } else if (name == "t13i") {
    const int c = get("c");
    const int d = get("d");
    f = t13i(c, d, get("m"));
  } else if (name == "t13ii") {
    f = t13ii();
  } else if (name == "t13iii") {
    f = t13iii();
  } else if (name == "t14i") {
    f = t14i(get_poly());
  } else if (name == "t14ii") {
    f = t14ii();
  } else if (name == "t14iii") {
    f = t14iii();
  } else if (name == "t14iv") {
    f = t14iv();
  } else if (name == "t14v") {
    f = t14v(get("v"));
  } else if (name == "t14vi") {
    f = t14vi(get("v"));
  } else if (name == "t15") {
    f = t15(get_poly());
  } else {
    bad("unknown family: " + std::string(name));
  }
  if (used != params.size()) bad("unexpected parameter in " + std::string(text));
  return f;
}

std::string TheoremFamily::to_string() const {
  std::string s(id_name(id));
  switch (id) {
    case Id::T11: return s + ":a=" + std::to_string(a) + ",m=" + std::to_string(m);
    case Id::T12i: return s + ":a=" + std::to_string(a);
    case Id::T12ii: return s + ":c=" + std::to_string(c);
    case Id::T12iii: return s + ":d=" + std::to_string(d) + ",m=" + std::to_string(m);
    case Id::T13i:
      return s + ":c=" + std::to_string(c) + ",d=" + std::to_string(d) + ",m=" + std::to_string(m);
    case Id::T14i:
      return s + ":p=" + std::string(detail::kProducts.at(static_cast<std::size_t>(index)).poly);
    case Id::T14v:
    case Id::T14vi: return s + ":v=" + std::to_string(variant);
    case Id::T15:
      return s + ":p=" + std::string(detail::kQuadratics.at(static_cast<std::size_t>(index)).poly);
    default: return s;
  }
}

bool TheoremFamily::four_square() const { return id != Id::T11 && id != Id::T12v; }

ConstraintSpec TheoremFamily::spec() const { return parse_constraint(spec_text(*this)); }

Int TheoremFamily::n_min() const {
  switch (id) {
    case Id::T12v:
    case Id::T14iii:
    case Id::T14iv:
    case Id::T14v:
    case Id::T14vi: return 1;
    default: return 0;
  }
}

bool TheoremFamily::conditional() const {
  return id == Id::T13ii || id == Id::T13iii || id == Id::T14ii;
}

std::vector<std::string> TheoremFamily::expected_branches() const { return branch_table(*this); }

std::vector<TheoremFamily> unconditional_families() {
  std::vector<TheoremFamily> out;
  for (int a : {1, 4}) {
    for (int m : {4, 5, 6}) out.push_back(TheoremFamily::t11(a, m));
  }
  for (int a : {1, 2}) out.push_back(TheoremFamily::t12i(a));
  for (int c : {1, 2, 4}) out.push_back(TheoremFamily::t12ii(c));
  for (int d : {1, 2}) {
    for (int m : {2, 3}) out.push_back(TheoremFamily::t12iii(d, m));
  }
  out.push_back(TheoremFamily::t12iv());
  out.push_back(TheoremFamily::t12v());
  for (int m : {2, 3}) {
    for (auto [c, d] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 4}, {2, 3}, {2, 6}}) {
      if (in_s(c, d, m)) out.push_back(TheoremFamily::t13i(c, d, m));
    }
  }
  for (const auto& e : detail::kProducts) out.push_back(TheoremFamily::t14i(e.poly));
  out.push_back(TheoremFamily::t14iii());
  out.push_back(TheoremFamily::t14iv());
  for (int v : {1, 2}) out.push_back(TheoremFamily::t14v(v));
  for (int v : {1, 2}) out.push_back(TheoremFamily::t14vi(v));
  for (const auto& e : detail::kQuadratics) out.push_back(TheoremFamily::t15(e.poly));
  return out;
}

std::vector<TheoremFamily> conditional_families() {
  return {TheoremFamily::t13ii(), TheoremFamily::t13iii(), TheoremFamily::t14ii()};
}

Representation Construction::representation(Int n, const TheoremFamily& family) const {
  if (!family.four_square()) {
    throw std::logic_error(family.to_string() + " does not produce four-square representations");
  }
  return Representation(n, coords, family.spec().domains);
}

bool check_construction(const TheoremFamily& family, Int n, const Construction& c) {
  const auto& v = c.coords;
  try {
    if (family.id == Id::T11) {
      if (std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; })) return false;
      Wide sum = Wide{family.a} * ipow(v[0], family.m);
      for (std::size_t i = 1; i < 4; ++i) sum += Wide{v[i]} * v[i];
      return sum == n;
    }
    if (family.id == Id::T12v) {
      if (std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; }) || v[0] > 20) return false;
      const Wide inner = 1 + 4 * Wide{v[1]} * v[1] + Wide{v[2]} * v[2];
      return (inner << (2 * v[0])) + Wide{v[3]} * v[3] == n;
    }
    const ConstraintSpec spec = family.spec();
    return satisfies(Representation(n, v, spec.domains), spec).has_value();
  } catch (const std::invalid_argument&) {
    return false;
  } catch (const OverflowError&) {
    return false;
  }
}

Construction construct(const TheoremFamily& family, Int n) {
  Construction c = detail::build(family, n);
  if (family.four_square()) {
    const ConstraintSpec spec = family.spec();
    std::optional<Witness> w;
    try {
      w = satisfies(Representation(n, c.coords, spec.domains), spec);
    } catch (const std::invalid_argument&) {
    }
    if (!w) {
      throw Error(family.to_string() + ": construction for n = " + std::to_string(n) +
                  " failed its check");
    }
    c.witness = *w;
  } else {
    if (!check_construction(family, n, c)) {
      throw Error(family.to_string() + ": construction for n = " + std::to_string(n) +
                  " failed its check");
    }
    if (family.id == Id::T11) {
      c.witness.t = c.coords[0];
      c.witness.value = Wide{family.a} * ipow(c.coords[0], family.m);
    }
  }
  return c;
}

Thm12v construct_thm12v(Int n) {
  if (n < 1) bad("construct_thm12v requires n >= 1");
  const Construction c = construct(TheoremFamily::t12v(), n);
  return {static_cast<int>(c.coords[0]), c.coords[1], c.coords[2], c.coords[3]};
}

std::string format_construction(const TheoremFamily& family, Int n, const Construction& c) {
  const auto& v = c.coords;
  std::string out = std::to_string(n) + " = ";
  if (family.id == Id::T11) {
    if (family.a != 1) out += std::to_string(family.a) + "*";
    out += sq(v[0], family.m);
    for (std::size_t i = 1; i < 4; ++i) out += " + " + sq(v[i], 2);
    return out;
  }
  if (family.id == Id::T12v) {
    return out + "4^" + std::to_string(v[0]) + "(1 + 4*" + sq(v[1], 2) + " + " + sq(v[2], 2) +
           ") + " + sq(v[3], 2);
  }
  for (std::size_t i = 0; i < 4; ++i) out += (i ? " + " : "") + sq(v[i], 2);
  return out;
}

std::vector<std::string> ValidationReport::missing_branches(const TheoremFamily& family) const {
  std::vector<std::string> out;
  for (const auto& b : family.expected_branches()) {
    if (!branch_hits.count(b)) out.push_back(b);
  }
  return out;
}

ValidationReport batch_validate(const TheoremFamily& family, Int bound) {
  require_in_cap(bound);
  ValidationReport report;
  for (Int n = family.n_min(); n <= bound; ++n) {
    ++report.checked;
    try {
      const Construction c = construct(family, n);
      // log4(n) + 1 levels at most.
      int limit = 1;
      for (Int m = n; m >= 4; m /= 4) ++limit;
      if (c.depth > limit) {
        report.failures.push_back({n, "descent depth " + std::to_string(c.depth) + " exceeds " +
                                          std::to_string(limit)});
      }
      report.max_depth = std::max(report.max_depth, c.depth);
      for (const auto& b : c.branches) ++report.branch_hits[b];
    } catch (const Error& e) {
      report.failures.push_back({n, e.what()});
    }
  }
  return report;
}

}  // namespace foursq
