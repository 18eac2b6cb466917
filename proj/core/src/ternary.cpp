#include "foursq/ternary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "foursq/errors.hpp"

namespace foursq {

namespace {

bool four_adic(Int n, Int modulus, Int residue) {
  if (n < 1) return false;
  return strip_fours(n).m % modulus == residue;
}

Int isqrt_int(Int v) { return static_cast<Int>(isqrt(static_cast<std::uint64_t>(v))); }

std::vector<ExceptionRule> build_catalog() {
  auto rule = [](TernaryForm f, std::vector<ExceptionClause> clauses) {
    ExceptionRule r;
    r.form = f;
    r.clauses = std::move(clauses);
    r.name = "E(" + f.to_string() + ")";
    return r;
  };
  std::vector<ExceptionRule> rules;
  rules.push_back(rule({1, 1, 1}, {FourAdicClause{8, 7}}));
  rules.push_back(rule({1, 1, 2}, {FourAdicClause{16, 14}}));
  rules.push_back(rule({1, 2, 6}, {FourAdicClause{8, 5}}));
  rules.push_back(rule({2, 3, 6}, {ResidueClause{3, {1}}, FourAdicClause{8, 7}}));
  rules.push_back(rule({1, 2, 3}, {FourAdicClause{16, 10}}));
  rules.push_back(rule({1, 3, 6}, {ResidueClause{3, {2}}, FourAdicClause{16, 14}}));
  rules.push_back(rule({1, 5, 5}, {ResidueClause{5, {2, 3}}, FourAdicClause{8, 7}}));
  rules.push_back(rule({1, 1, 5}, {FourAdicClause{8, 3}}));

  ExceptionRule even = rule({1, 1, 10}, {FourAdicClause{16, 6}});
  even.even_only = true;
  even.name = "E(1,1,10)∩2Z";
  rules.push_back(even);

  // Only the sufficient direction: q ≡ 1 (mod 4) is represented.
  ExceptionRule partial = rule({1, 4, 16}, {ResidueClause{4, {1}}});
  partial.one_sided = true;
  rules.push_back(partial);
  return rules;
}

}  // namespace

std::array<Int, 3> TernaryForm::sorted() const {
  std::array<Int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return s;
}

std::string TernaryForm::to_string() const {
  const auto s = sorted();
  return std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]);
}

TernaryForm TernaryForm::parse(const std::string& text) {
  std::array<Int, 3> v{};
  std::istringstream in(text);
  std::string part;
  int count = 0;
  while (std::getline(in, part, ',')) {
    if (count == 3) throw std::invalid_argument("form needs exactly three coefficients: " + text);
    std::size_t used = 0;
    try {
      v[count] = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad form coefficient '" + part + "'");
    }
    if (used != part.size() || v[count] < 1) {
      throw std::invalid_argument("bad form coefficient '" + part + "'");
    }
    ++count;
  }
  if (count != 3) throw std::invalid_argument("form needs exactly three coefficients: " + text);
  for (Int x : v) {
    if (x > kMaxN) throw OverflowError("form coefficient exceeds 2^40");
  }
  return TernaryForm{v[0], v[1], v[2]};
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::NotMember: return "not-member";
    case Membership::Member: return "member";
    case Membership::Unknown: return "unknown";
  }
  return "unknown";
}

bool clause_contains(const ExceptionClause& clause, Int n) {
  if (const auto* fa = std::get_if<FourAdicClause>(&clause)) {
    return four_adic(n, fa->modulus, fa->residue);
  }
  const auto& rc = std::get<ResidueClause>(clause);
  const Int r = n % rc.modulus;
  return std::find(rc.residues.begin(), rc.residues.end(), r) != rc.residues.end();
}

const std::vector<ExceptionRule>& exception_catalog() {
  static const std::vector<ExceptionRule> catalog = build_catalog();
  return catalog;
}

const ExceptionRule* find_exception_rule(const TernaryForm& form) {
  const auto key = form.sorted();
  for (const auto& r : exception_catalog()) {
    if (r.form.sorted() == key) return &r;
  }
  return nullptr;
}

Membership exception_membership(const TernaryForm& form, Int n) {
  require_in_cap(n);
  const ExceptionRule* rule = find_exception_rule(form);
  if (rule == nullptr) {
    throw UnknownFormError("no closed form catalogued for E(" + form.to_string() +
                           "); use enumerate_ternary");
  }
  if (rule->one_sided) {
    for (const auto& c : rule->clauses) {
      if (clause_contains(c, n)) return Membership::NotMember;
    }
    return Membership::Unknown;
  }
  if (rule->even_only && n % 2 != 0) {
    throw UnknownFormError("E(1,1,10) is catalogued on even n only");
  }
  for (const auto& c : rule->clauses) {
    if (clause_contains(c, n)) return Membership::Member;
  }
  return Membership::NotMember;
}

std::vector<std::array<Int, 3>> enumerate_ternary(const TernaryForm& form, Int n,
                                                  TernaryDomain domain) {
  require_in_cap(n);
  if (form.a < 1 || form.b < 1 || form.c < 1) throw std::invalid_argument("form coefficients must be positive");
  if (form.a > kMaxN || form.b > kMaxN || form.c > kMaxN) throw OverflowError("form coefficient exceeds 2^40");
  std::vector<std::array<Int, 3>> out;
  const Int xmax = isqrt_int(n / form.a);
  const Int xmin = domain == TernaryDomain::Z ? -xmax : 0;
  for (Int x = xmin; x <= xmax; ++x) {
    const Int rx = n - form.a * x * x;
    const Int ymax = isqrt_int(rx / form.b);
    const Int ymin = domain == TernaryDomain::Z ? -ymax : 0;
    for (Int y = ymin; y <= ymax; ++y) {
      const Int ry = rx - form.b * y * y;
      if (ry % form.c != 0) continue;
      const auto z = exact_sqrt(ry / form.c);
      if (!z) continue;
      if (*z != 0 && domain == TernaryDomain::Z) out.push_back({x, y, -*z});
      out.push_back({x, y, *z});
    }
  }
  return out;
}

std::optional<std::array<Int, 3>> find_ternary(const TernaryForm& form, Int n) {
  require_in_cap(n);
  for (Int x = 0; form.a * x * x <= n; ++x) {
    const Int rx = n - form.a * x * x;
    for (Int y = 0; form.b * y * y <= rx; ++y) {
      const Int ry = rx - form.b * y * y;
      if (ry % form.c != 0) continue;
      if (const auto z = exact_sqrt(ry / form.c)) return std::array<Int, 3>{x, y, *z};
    }
  }
  return std::nullopt;
}

std::vector<bool> representable_table(const TernaryForm& form, Int bound) {
  require_in_cap(bound);
  std::vector<char> mark(static_cast<std::size_t>(bound) + 1, 0);
  for (Int x = 0; form.a * x * x <= bound; ++x) {
    const Int vx = form.a * x * x;
    for (Int y = 0; vx + form.b * y * y <= bound; ++y) {
      const Int vy = vx + form.b * y * y;
      for (Int z = 0; vy + form.c * z * z <= bound; ++z) {
        mark[static_cast<std::size_t>(vy + form.c * z * z)] = 1;
      }
    }
  }
  return std::vector<bool>(mark.begin(), mark.end());
}

std::vector<Int> verify_exception_catalog(const TernaryForm& form, Int bound) {
  const ExceptionRule* rule = find_exception_rule(form);
  if (rule == nullptr) throw UnknownFormError("no closed form catalogued for E(" + form.to_string() + ")");
  const auto rep = representable_table(form, bound);
  std::vector<Int> mismatches;
  for (Int n = 0; n <= bound; ++n) {
    if (rule->even_only && n % 2 != 0) continue;
    const Membership m = exception_membership(form, n);
    const bool representable = rep[static_cast<std::size_t>(n)];
    const bool bad = (m == Membership::Member && representable) ||
                     (m == Membership::NotMember && !representable);
    if (bad) mismatches.push_back(n);
  }
  return mismatches;
}

const std::array<std::string, 6>& disjoint_family_names() {
  static const std::array<std::string, 6> names{"E(1,1,1)", "E(1,1,2)", "E(1,2,3)",
                                                "E(1,2,6)", "E(1,1,5)", "E(1,1,10)∩2Z"};
  return names;
}

std::vector<DisjointnessViolation> pairwise_disjoint(Int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  require_in_cap(bound);
  std::vector<DisjointnessViolation> out;
  for (Int n = 0; n <= bound; ++n) {
    const std::array<bool, 6> in{in_E111(n), in_E112(n),  in_E123(n),
                                 in_E126(n), in_E115(n), in_E1110_even(n)};
    for (int i = 0; i < 6; ++i) {
      if (!in[i]) continue;
      for (int j = i + 1; j < 6; ++j) {
        if (in[j]) out.push_back({n, i, j});
      }
    }
  }
  return out;
}

bool in_E111(Int n) { return four_adic(n, 8, 7); }
bool in_E112(Int n) { return four_adic(n, 16, 14); }
bool in_E115(Int n) { return four_adic(n, 8, 3); }
bool in_E123(Int n) { return four_adic(n, 16, 10); }
bool in_E126(Int n) { return four_adic(n, 8, 5); }
bool in_E136(Int n) { return n % 3 == 2 || four_adic(n, 16, 14); }
bool in_E155(Int n) { return n % 5 == 2 || n % 5 == 3 || four_adic(n, 8, 7); }
bool in_E236(Int n) { return n % 3 == 1 || four_adic(n, 8, 7); }
bool in_E1110_even(Int n) { return n % 2 == 0 && four_adic(n, 16, 6); }

}  // namespace foursq
