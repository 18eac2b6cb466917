#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "foursq/constraint.hpp"
#include "foursq/errors.hpp"

namespace foursq {
namespace {

enum class Tok {
  Int, Var, Word, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, Tilde, Bar,
  LBracket, RBracket, Semi, Less, LessEq, Greater, GreaterEq, Equal, End
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;  ///< word spelling
  Int value = 0;     ///< Int literal or Var index
};

bool is_var_char(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }

bool is_keyword(const std::string& w) {
  static const char* const kWords[] = {"legs", "max", "min", "in", "or", "N", "Z", "zero",
                                       "square", "even_square", "twice_square", "cube",
                                       "nonneg_cube", "power"};
  for (const char* k : kWords) {
    if (w == k) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (v > (kMaxN << 10)) throw SyntaxError("integer literal too large", start);
        v = v * 10 + (s[i] - '0');
        ++i;
      }
      out.push_back({Tok::Int, start, {}, v});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      if (is_keyword(word)) {
        out.push_back({Tok::Word, start, word, 0});
        continue;
      }
      for (std::size_t k = 0; k < word.size(); ++k) {
        if (!is_var_char(word[k])) throw SyntaxError("unknown identifier '" + word + "'", start);
      }
      for (std::size_t k = 0; k < word.size(); ++k) {
        const Int index = word[k] == 'x' ? 0 : word[k] == 'y' ? 1 : word[k] == 'z' ? 2 : 3;
        out.push_back({Tok::Var, start + k, {}, index});
      }
      continue;
    }
    auto two = [&](char next) { return i + 1 < s.size() && s[i + 1] == next; };
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '~': kind = Tok::Tilde; break;
      case '|': kind = Tok::Bar; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ';': kind = Tok::Semi; break;
      case '=': kind = Tok::Equal; break;
      case '<':
        kind = two('=') ? Tok::LessEq : Tok::Less;
        break;
      case '>':
        kind = two('=') ? Tok::GreaterEq : Tok::Greater;
        break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
    i += (kind == Tok::LessEq || kind == Tok::GreaterEq) ? 2 : 1;
    out.push_back({kind, start, {}, 0});
  }
  out.push_back({Tok::End, s.size(), {}, 0});
  return out;
}

/// num / den with den >= 1.
struct Rational {
  Polynomial num;
  Int den = 1;
};

Rational add(const Rational& a, const Rational& b, bool subtract) {
  const Int l = std::lcm(a.den, b.den);
  const Polynomial rhs = b.num.scaled(l / b.den);
  return {a.num.scaled(l / a.den) + (subtract ? -rhs : rhs), l};
}

struct Expr {
  Rational value;
  /// Non-constant factors of a single-term expression; empty for sums.
  std::vector<Polynomial> factors;
  bool single_term = false;
};

// Side of a comparison: a linear expression or max/min over sides.
struct Side {
  enum class Kind { Lin, Max, Min } kind = Kind::Lin;
  Polynomial lin;
  std::vector<Side> args;
};

using Cnf = std::vector<SideClause>;

Cnf cnf_or(const Cnf& a, const Cnf& b) {
  Cnf out;
  for (const auto& ca : a) {
    for (const auto& cb : b) {
      SideClause c = ca;
      c.any_of.insert(c.any_of.end(), cb.any_of.begin(), cb.any_of.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

Cnf cnf_and(Cnf a, const Cnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// lhs >= rhs (or > when strict) as CNF.
Cnf compare(const Side& lhs, const Side& rhs, bool strict) {
  if (lhs.kind != Side::Kind::Lin) {
    Cnf acc;
    bool first = true;
    for (const auto& a : lhs.args) {
      Cnf c = compare(a, rhs, strict);
      if (first) {
        acc = std::move(c);
        first = false;
      } else {
        acc = lhs.kind == Side::Kind::Max ? cnf_or(acc, c) : cnf_and(std::move(acc), c);
      }
    }
    return acc;
  }
  if (rhs.kind != Side::Kind::Lin) {
    Cnf acc;
    bool first = true;
    for (const auto& b : rhs.args) {
      Cnf c = compare(lhs, b, strict);
      if (first) {
        acc = std::move(c);
        first = false;
      } else {
        acc = rhs.kind == Side::Kind::Max ? cnf_and(std::move(acc), c) : cnf_or(acc, c);
      }
    }
    return acc;
  }
  return {SideClause{{LinearAtom{lhs.lin - rhs.lin, strict}}}};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  ConstraintSpec spec() {
    ConstraintSpec out;
    out.alternatives.push_back(clause());
    while (peek().kind == Tok::Bar) {
      next();
      out.alternatives.push_back(clause());
    }
    if (peek().kind == Tok::LBracket) {
      next();
      items(out);
      expect(Tok::RBracket, "']'");
    }
    expect(Tok::End, "end of input");
    return out;
  }

  Polynomial polynomial() {
    const std::size_t at = peek().pos;
    Expr e = expr();
    expect(Tok::End, "end of input");
    if (e.value.den != 1) throw SyntaxError("division not allowed here", at);
    return e.value.num;
  }

  std::vector<SideClause> conditions() {
    ConstraintSpec tmp;
    if (peek().kind != Tok::End) items(tmp, false);
    expect(Tok::End, "end of input");
    return tmp.side_conditions;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, peek().pos); }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    next();
  }

  bool is_word(const char* w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Word && peek(ahead).text == w;
  }

  Target clause() {
    if (is_word("legs")) {
      next();
      expect(Tok::LParen, "'('");
      const Expr p = expr();
      expect(Tok::Comma, "','");
      const Expr q = expr();
      expect(Tok::RParen, "')'");
      const Int l = std::lcm(p.value.den, q.value.den);
      return LegsTarget{p.value.num.scaled(l / p.value.den), q.value.num.scaled(l / q.value.den)};
    }
    const Expr e = expr();
    expect(Tok::Tilde, "'~'");
    const std::size_t at = peek().pos;
    Int scale = 1;
    if (peek().kind == Tok::Int) {
      scale = next().value;
      if (scale < 1) throw SyntaxError("target scale must be positive", at);
      expect(Tok::Star, "'*'");
    }
    const PowerClass base = target_class();
    if (base.is_zero()) {
      if (scale != 1) throw SyntaxError("zero target takes no scale", at);
      if (e.single_term && e.factors.size() >= 2) return ZeroProductTarget{e.factors};
      return PowerTarget{e.value.num, base, 1};
    }
    return PowerTarget{e.value.num, base.rescaled(checked_mul(scale, e.value.den)), e.value.den};
  }

  PowerClass target_class() {
    const Token& t = peek();
    if (t.kind != Tok::Word) fail("expected target class");
    next();
    if (t.text == "zero") return PowerClass::zero();
    if (t.text == "square") return PowerClass::square();
    if (t.text == "even_square") return PowerClass::even_square();
    if (t.text == "twice_square") return PowerClass::twice_square();
    if (t.text == "cube") return PowerClass::cube();
    if (t.text == "nonneg_cube") return PowerClass::nonneg_cube();
    if (t.text == "power") {
      if (peek().kind != Tok::Int || peek().value < 2 || peek().value > 6) {
        fail("power exponent must be 2..6");
      }
      return PowerClass::kth_power(static_cast<int>(next().value));
    }
    throw SyntaxError("unknown target class '" + t.text + "'", t.pos);
  }

  Expr expr() {
    Expr out;
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    Expr first = term();
    if (negate) first.value.num = -first.value.num;
    out = std::move(first);
    bool more = false;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool subtract = next().kind == Tok::Minus;
      const Expr t = term();
      out.value = add(out.value, t.value, subtract);
      more = true;
    }
    if (more) {
      out.single_term = false;
      out.factors.clear();
    }
    return out;
  }

  static bool starts_factor(Tok k) { return k == Tok::Int || k == Tok::Var || k == Tok::LParen; }

  Expr term() {
    Expr out;
    out.single_term = true;
    out.value = factor(out.factors);
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        mul(out.value, factor(out.factors));
      } else if (peek().kind == Tok::Slash) {
        next();
        const std::size_t at = peek().pos;
        if (peek().kind != Tok::Int || peek().value == 0) throw SyntaxError("expected nonzero integer divisor", at);
        out.value.den = checked_mul(out.value.den, next().value);
      } else if (starts_factor(peek().kind)) {
        mul(out.value, factor(out.factors));
      } else {
        break;
      }
    }
    return out;
  }

  static void mul(Rational& acc, const Rational& f) {
    acc.num = acc.num * f.num;
    acc.den = checked_mul(acc.den, f.den);
  }

  Rational factor(std::vector<Polynomial>& factors) {
    Rational base = primary();
    if (peek().kind == Tok::Caret) {
      next();
      const std::size_t at = peek().pos;
      if (peek().kind != Tok::Int) throw SyntaxError("expected exponent", at);
      const Int e = next().value;
      if (e > kMaxDegree) throw DegreeError("exponent " + std::to_string(e) + " exceeds the cap of 4");
      Int den = 1;
      for (Int i = 0; i < e; ++i) den = checked_mul(den, base.den);
      base = Rational{base.num.pow(static_cast<int>(e)), den};
    }
    if (!base.num.is_constant()) factors.push_back(base.num);
    return base;
  }

  Rational primary() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      next();
      return {Polynomial::constant(t.value), 1};
    }
    if (t.kind == Tok::Var) {
      next();
      return {Polynomial::variable(static_cast<int>(t.value)), 1};
    }
    if (t.kind == Tok::LParen) {
      next();
      Expr e = expr();
      expect(Tok::RParen, "')'");
      return e.value;
    }
    fail("expected expression");
  }

  // Bracket contents: domain items and condition items separated by ';'.
  void items(ConstraintSpec& out, bool allow_domains = true) {
    for (;;) {
      item(out, allow_domains);
      if (peek().kind != Tok::Semi) break;
      next();
    }
  }

  bool domain_word(std::size_t ahead) const { return is_word("N", ahead) || is_word("Z", ahead); }

  Domain domain() {
    const bool natural = is_word("N");
    next();
    if (!natural && peek().kind == Tok::Plus) {
      next();
      return Domain::ZPos;
    }
    return natural ? Domain::N : Domain::Z;
  }

  bool item_ends(std::size_t ahead) const {
    const Tok k = peek(ahead).kind;
    return k == Tok::Semi || k == Tok::RBracket || k == Tok::End;
  }

  void item(ConstraintSpec& out, bool allow_domains) {
    const std::size_t at = peek().pos;
    // Whole-tuple domain: "N", "Z", "Z+".
    if (domain_word(0)) {
      if (!allow_domains) throw SyntaxError("domain not allowed here", at);
      const Domain d = domain();
      if (!item_ends(0)) fail("expected ';' or ']'");
      out.domains = {d, d, d, d};
      return;
    }
    // Variable list followed by "in".
    std::size_t k = 0;
    while (peek(k).kind == Tok::Var && (peek(k + 1).kind == Tok::Comma || is_word("in", k + 1))) {
      if (is_word("in", k + 1)) {
        if (!allow_domains) throw SyntaxError("domain not allowed here", at);
        std::vector<Int> vars;
        while (peek().kind == Tok::Var) {
          vars.push_back(next().value);
          if (peek().kind == Tok::Comma) next();
        }
        next();  // "in"
        if (!domain_word(0)) fail("expected N, Z or Z+");
        const Domain d = domain();
        for (Int v : vars) out.domains[static_cast<std::size_t>(v)] = d;
        return;
      }
      k += 2;
    }
    Cnf acc = condition();
    while (is_word("or")) {
      next();
      acc = cnf_or(acc, condition());
    }
    out.side_conditions.insert(out.side_conditions.end(), acc.begin(), acc.end());
  }

  Cnf condition() {
    Side lhs = side();
    Cnf acc;
    bool any = false;
    for (;;) {
      const Tok op = peek().kind;
      if (op != Tok::Less && op != Tok::LessEq && op != Tok::Greater && op != Tok::GreaterEq &&
          op != Tok::Equal) {
        break;
      }
      next();
      Side rhs = side();
      Cnf c;
      switch (op) {
        case Tok::Less: c = compare(rhs, lhs, true); break;
        case Tok::LessEq: c = compare(rhs, lhs, false); break;
        case Tok::Greater: c = compare(lhs, rhs, true); break;
        case Tok::GreaterEq: c = compare(lhs, rhs, false); break;
        default: c = cnf_and(compare(lhs, rhs, false), compare(rhs, lhs, false)); break;
      }
      acc = cnf_and(std::move(acc), c);
      any = true;
      lhs = std::move(rhs);
    }
    if (!any) fail("expected comparison operator");
    return acc;
  }

  Side side() {
    if (is_word("max") || is_word("min")) {
      Side s;
      s.kind = is_word("max") ? Side::Kind::Max : Side::Kind::Min;
      next();
      expect(Tok::LParen, "'('");
      s.args.push_back(side());
      while (peek().kind == Tok::Comma) {
        next();
        s.args.push_back(side());
      }
      expect(Tok::RParen, "')'");
      return s;
    }
    if (peek().kind == Tok::Bar) {
      next();
      const Polynomial inner = linear();
      expect(Tok::Bar, "'|'");
      Side s;
      s.kind = Side::Kind::Max;
      s.args.push_back(Side{Side::Kind::Lin, inner, {}});
      s.args.push_back(Side{Side::Kind::Lin, -inner, {}});
      return s;
    }
    return Side{Side::Kind::Lin, linear(), {}};
  }

  Polynomial linear() {
    const std::size_t at = peek().pos;
    const Expr e = expr();
    if (e.value.den != 1) throw SyntaxError("division not allowed in side conditions", at);
    if (e.value.num.degree() > 1) throw SyntaxError("side conditions must be linear", at);
    return e.value.num;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstraintSpec parse_constraint(std::string_view text) { return Parser(text).spec(); }

Polynomial parse_polynomial(std::string_view text) { return Parser(text).polynomial(); }

std::vector<SideClause> parse_side_conditions(std::string_view text) {
  return Parser(text).conditions();
}

}  // namespace foursq
