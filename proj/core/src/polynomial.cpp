#include "foursq/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "foursq/errors.hpp"

namespace foursq {

namespace {

// Descending graded-lex: higher total degree first, then lexicographically
// larger exponent vectors (x before y before z before w).
bool grlex_greater(const Exponents& a, const Exponents& b) {
  const int da = a[0] + a[1] + a[2] + a[3];
  const int db = b[0] + b[1] + b[2] + b[3];
  if (da != db) return da > db;
  return a > b;
}

Wide power(Int base, int e) {
  Wide r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, Wide{base});
  return r;
}

}  // namespace

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

Polynomial Polynomial::variable(int index) {
  if (index < 0 || index >= kVarCount) throw std::out_of_range("variable index");
  Polynomial p;
  Monomial m;
  m.exponents[static_cast<std::size_t>(index)] = 1;
  m.coefficient = 1;
  p.terms_.push_back(m);
  p.mask_ = 1U << index;
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_greater(a.exponents, b.exponents); });
  std::vector<Monomial> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coefficient = checked_add(merged.back().coefficient, t.coefficient);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Monomial& m) { return m.coefficient == 0; });
  terms_ = std::move(merged);
  mask_ = 0;
  for (const auto& t : terms_) {
    if (t.degree() > kMaxDegree) {
      throw DegreeError("monomial of degree " + std::to_string(t.degree()) + " exceeds the cap of 4");
    }
    for (int v = 0; v < kVarCount; ++v) {
      if (t.exponents[static_cast<std::size_t>(v)] != 0) mask_ |= 1U << v;
    }
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].degree() == 0);
}

Int Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().degree() == 0) return terms_.back().coefficient;
  return 0;
}

int Polynomial::degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exponents[static_cast<std::size_t>(var)]);
  return d;
}

Int Polynomial::content() const {
  Int g = 0;
  for (const auto& t : terms_) g = std::gcd(g, t.coefficient);
  return g;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Monomial> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::move(all));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Monomial> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m;
      for (std::size_t v = 0; v < kVarCount; ++v) {
        const int e = a.exponents[v] + b.exponents[v];
        if (e > kMaxDegree) throw DegreeError("exponent above 4 after expansion");
        m.exponents[v] = static_cast<std::uint8_t>(e);
      }
      m.coefficient = checked_mul(a.coefficient, b.coefficient);
      all.push_back(m);
    }
  }
  return from_terms(std::move(all));
}

Polynomial Polynomial::scaled(Int k) const {
  std::vector<Monomial> all = terms_;
  for (auto& t : all) t.coefficient = checked_mul(t.coefficient, k);
  return from_terms(std::move(all));
}

Polynomial Polynomial::divided(Int k) const {
  if (k == 0) throw std::invalid_argument("division by zero");
  std::vector<Monomial> all = terms_;
  for (auto& t : all) {
    if (t.coefficient % k != 0) throw std::invalid_argument("inexact polynomial division");
    t.coefficient /= k;
  }
  return from_terms(std::move(all));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Wide Polynomial::eval(std::span<const Int, kVarCount> point) const {
  Wide sum = 0;
  for (const auto& t : terms_) {
    Wide term = t.coefficient;
    for (std::size_t v = 0; v < kVarCount; ++v) {
      if (t.exponents[v] != 0) term = checked_mul(term, power(point[v], t.exponents[v]));
    }
    sum = checked_add(sum, term);
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Int c = t.coefficient;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    const bool has_vars = t.degree() > 0;
    if (c != 1 || !has_vars) out += std::to_string(c);
    for (std::size_t v = 0; v < kVarCount; ++v) {
      const int e = t.exponents[v];
      if (e == 0) continue;
      out += kVarNames[v];
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace foursq
