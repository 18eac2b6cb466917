#include "foursq/constraint.hpp"

#include <stdexcept>

#include "foursq/errors.hpp"

namespace foursq {

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::N: return "N";
    case Domain::Z: return "Z";
    case Domain::ZPos: return "Z+";
  }
  return "?";
}

bool domain_admits(Domain d, Int v) {
  switch (d) {
    case Domain::N: return v >= 0;
    case Domain::Z: return true;
    case Domain::ZPos: return v > 0;
  }
  return false;
}

Representation::Representation(Int n, std::array<Int, kVarCount> coords, DomainSet domains)
    : n_(n), coords_(coords), domains_(domains) {
  Wide sum = 0;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (!domain_admits(domains_[i], coords_[i])) {
      throw std::invalid_argument(std::string("coordinate ") + kVarNames[i] + " outside domain " +
                                  std::string(foursq::to_string(domains_[i])));
    }
    sum += static_cast<Wide>(coords_[i]) * coords_[i];
  }
  if (sum != n_) throw std::invalid_argument("squares do not sum to n");
}

std::string Representation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (i) out += ", ";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

bool LinearAtom::holds(std::span<const Int, kVarCount> point) const {
  const Wide v = expr.eval(point);
  return strict ? v > 0 : v >= 0;
}

namespace {

std::string side_text(const std::vector<Monomial>& terms) {
  if (terms.empty()) return "0";
  return Polynomial::from_terms(terms).to_string();
}

bool is_bare_monomial(const Polynomial& p) {
  return p.terms().size() == 1 && p.terms()[0].coefficient == 1 && p.terms()[0].degree() > 0;
}

std::string factor_text(const Polynomial& p) {
  if (is_bare_monomial(p)) return p.to_string();
  return "(" + p.to_string() + ")";
}

std::string target_text(const Target& target) {
  if (const auto* pt = std::get_if<PowerTarget>(&target)) {
    std::string poly = pt->poly.to_string();
    // A single product term with a zero target would reparse as a zero product.
    if (pt->cls.is_zero() && pt->poly.terms().size() == 1 && pt->poly.terms()[0].degree() > 1) {
      poly = "(" + poly + ")";
    }
    return poly + " ~ " + pt->cls.to_string();
  }
  if (const auto* zt = std::get_if<ZeroProductTarget>(&target)) {
    std::string out;
    for (std::size_t i = 0; i < zt->factors.size(); ++i) {
      if (i) out += '*';
      out += factor_text(zt->factors[i]);
    }
    return out + " ~ zero";
  }
  const auto& lt = std::get<LegsTarget>(target);
  return "legs(" + lt.p.to_string() + ", " + lt.q.to_string() + ")";
}

std::string domains_text(const DomainSet& domains) {
  std::string out;
  for (Domain d : {Domain::N, Domain::Z, Domain::ZPos}) {
    std::string vars;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (domains[i] != d) continue;
      if (!vars.empty()) vars += ',';
      vars += kVarNames[i];
    }
    if (vars.empty()) continue;
    if (!out.empty()) out += "; ";
    out += vars + " in " + std::string(to_string(d));
  }
  return out;
}

}  // namespace

std::string LinearAtom::to_string() const {
  std::vector<Monomial> left;
  std::vector<Monomial> right;
  for (const auto& t : expr.terms()) {
    if (t.coefficient > 0) {
      left.push_back(t);
    } else {
      right.push_back(Monomial{t.exponents, -t.coefficient});
    }
  }
  return side_text(left) + (strict ? ">" : ">=") + side_text(right);
}

bool SideClause::holds(std::span<const Int, kVarCount> point) const {
  for (const auto& atom : any_of) {
    if (atom.holds(point)) return true;
  }
  return false;
}

unsigned SideClause::variable_mask() const {
  unsigned mask = 0;
  for (const auto& atom : any_of) mask |= atom.expr.variable_mask();
  return mask;
}

std::string SideClause::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < any_of.size(); ++i) {
    if (i) out += " or ";
    out += any_of[i].to_string();
  }
  return out;
}

std::string ConstraintSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    if (i) out += " | ";
    out += target_text(alternatives[i]);
  }
  out += " [" + domains_text(domains);
  for (const auto& clause : side_conditions) out += "; " + clause.to_string();
  return out + "]";
}

std::string describe(const Witness& w, const ConstraintSpec& spec) {
  const Target& target = spec.alternatives.at(w.alternative);
  switch (w.kind) {
    case Witness::Kind::Power: {
      const auto& pt = std::get<PowerTarget>(target);
      std::string out = "t=" + std::to_string(w.t) + " (" + pt.poly.to_string() + " = ";
      if (pt.cls.is_zero()) return out + "0)";
      if (pt.cls.scale() != 1) out += std::to_string(pt.cls.scale()) + "*";
      const std::string base = w.t < 0 ? "(" + std::to_string(w.t) + ")" : std::to_string(w.t);
      return out + base + "^" + std::to_string(pt.cls.exponent()) + ")";
    }
    case Witness::Kind::ZeroFactor: {
      const auto& zt = std::get<ZeroProductTarget>(target);
      return "t=0 (" + zt.factors.at(w.factor).to_string() + " = 0)";
    }
    case Witness::Kind::Legs: {
      const auto& lt = std::get<LegsTarget>(target);
      return "t=" + std::to_string(w.t) + " (legs " + lt.p.to_string() + ", " + lt.q.to_string() +
             ", hypotenuse " + std::to_string(w.hypotenuse) + ")";
    }
  }
  return {};
}

Wide eval_poly(const Polynomial& poly, const Representation& rep) {
  return poly.eval(std::span<const Int, kVarCount>(rep.coords()));
}

std::optional<Witness> check_target(const Target& target, std::span<const Int, kVarCount> point) {
  if (const auto* pt = std::get_if<PowerTarget>(&target)) {
    const Wide v = pt->poly.eval(point);
    const auto t = is_in_power_class(v, pt->cls);
    if (!t) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::Power;
    w.t = *t;
    w.value = v;
    return w;
  }
  if (const auto* zt = std::get_if<ZeroProductTarget>(&target)) {
    for (std::size_t i = 0; i < zt->factors.size(); ++i) {
      if (zt->factors[i].eval(point) == 0) {
        Witness w;
        w.kind = Witness::Kind::ZeroFactor;
        w.factor = i;
        return w;
      }
    }
    return std::nullopt;
  }
  const auto& lt = std::get<LegsTarget>(target);
  const Wide p = lt.p.eval(point);
  const Wide q = lt.q.eval(point);
  if (p <= 0 || q <= 0) return std::nullopt;
  const Wide h2 = checked_add(checked_mul(p, p), checked_mul(q, q));
  const auto h = is_in_power_class(h2, PowerClass::square());
  if (!h) return std::nullopt;
  Witness w;
  w.kind = Witness::Kind::Legs;
  w.t = to_int(p);
  w.hypotenuse = *h;
  w.value = h2;
  return w;
}

std::optional<Witness> satisfies_point(std::span<const Int, kVarCount> point,
                                       const ConstraintSpec& spec) {
  for (const auto& clause : spec.side_conditions) {
    if (!clause.holds(point)) return std::nullopt;
  }
  for (std::size_t i = 0; i < spec.alternatives.size(); ++i) {
    if (auto w = check_target(spec.alternatives[i], point)) {
      w->alternative = i;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> satisfies(const Representation& rep, const ConstraintSpec& spec) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (!domain_admits(spec.domains[i], rep[i])) return std::nullopt;
  }
  return satisfies_point(std::span<const Int, kVarCount>(rep.coords()), spec);
}

}  // namespace foursq
