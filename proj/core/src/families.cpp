// Proof procedures for the theorem families. Each procedure strips the
// family's 4-adic factor, solves the residue by the proof's case analysis and
// scales the coordinates back up.

#include <stdexcept>

#include "family_tables.hpp"
#include "foursq/errors.hpp"
#include "foursq/quad_enum.hpp"
#include "foursq/ternary.hpp"

namespace foursq::detail {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::XZero: return "x_zero";
    case Strategy::YZero: return "y_zero";
    case Strategy::XEqY: return "x_eq_y";
    case Strategy::XEq2Y: return "x_eq_2y";
    case Strategy::YEq2X: return "y_eq_2x";
    case Strategy::XEq3Y: return "x_eq_3y";
    case Strategy::EvenXZeroY: return "even_x_zero_y";
    case Strategy::SumXYZ: return "x_plus_y_eq_z";
  }
  return "?";
}

namespace {

using Coords = std::array<Int, 4>;

Int mod(Int v, Int m) {
  const Int r = v % m;
  return r < 0 ? r + m : r;
}

Int ipow(Int base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

[[noreturn]] void unreachable(const std::string& where, Int n) {
  throw Error("construction step failed unexpectedly (" + where + ", n = " + std::to_string(n) + ")");
}

std::array<Int, 3> ternary(Int a, Int b, Int c, Int n, const char* where) {
  if (n < 0) unreachable(where, n);
  auto r = find_ternary(TernaryForm{a, b, c}, n);
  if (!r) unreachable(where, n);
  return *r;
}

std::array<Int, 3> three(Int n, const char* where) {
  auto r = three_square_decompose(n);
  if (!r) unreachable(where, n);
  return *r;
}

Coords search_base(const TheoremFamily& f, Int n) {
  auto found = find_constrained(n, f.spec());
  if (!found) unreachable("base table", n);
  return found->rep.coords();
}

// n = u^2 + v^2 + s^2 + w^2 with u + v = s, all >= 0. Requires n not in E(1,2,6).
Coords sum_rep(Int n) {
  const auto [X, Y, Z] = ternary(1, 2, 6, n, "x+y=z reduction");
  if (Y <= Z) return {Y + Z, Z - Y, 2 * Z, X};
  return {Y - Z, 2 * Z, Y + Z, X};
}

// n = (Y+Z)^2 + (Z-Y)^2 + Z^2 + X^2, so the first two sum to twice the third.
Coords half_sum_rep(Int n) {
  const auto [X, Y, Z] = ternary(1, 2, 3, n, "x+y=2z reduction");
  return {Y + Z, Z - Y, Z, X};
}

std::optional<Coords> apply_strategy(Strategy s, Int n) {
  switch (s) {
    case Strategy::XZero:
    case Strategy::YZero: {
      if (in_E111(n)) return std::nullopt;
      const auto [p, q, r] = three(n, "three squares");
      if (s == Strategy::XZero) return Coords{0, p, q, r};
      return Coords{p, 0, q, r};
    }
    case Strategy::XEqY: {
      if (in_E112(n)) return std::nullopt;
      const auto [a, b, c] = ternary(2, 1, 1, n, "x=y");
      return Coords{a, a, b, c};
    }
    case Strategy::XEq2Y:
    case Strategy::YEq2X: {
      if (in_E115(n)) return std::nullopt;
      const auto [a, b, c] = ternary(5, 1, 1, n, "x=2y");
      if (s == Strategy::XEq2Y) return Coords{2 * a, a, b, c};
      return Coords{a, 2 * a, b, c};
    }
    case Strategy::XEq3Y: {
      if (n % 2 != 0 || in_E1110_even(n)) return std::nullopt;
      const auto [a, b, c] = ternary(10, 1, 1, n, "x=3y");
      return Coords{3 * a, a, b, c};
    }
    case Strategy::EvenXZeroY: {
      if (n % 2 != 0 || in_E111(n)) return std::nullopt;
      const auto v = three(n, "even three squares");
      for (std::size_t i = 0; i < 3; ++i) {
        if (v[i] % 2 != 0) continue;
        Coords out{v[i], 0, 0, 0};
        std::size_t k = 2;
        for (std::size_t j = 0; j < 3; ++j) {
          if (j != i) out[k++] = v[j];
        }
        return out;
      }
      unreachable("even coordinate", n);
    }
    case Strategy::SumXYZ: {
      if (in_E126(n)) return std::nullopt;
      return sum_rep(n);
    }
  }
  return std::nullopt;
}

struct Result {
  Coords coords{};
  std::string branch;
};

Result by_strategies(const std::array<Strategy, 2>& list, Int n) {
  for (Strategy s : list) {
    if (auto c = apply_strategy(s, n)) return {*c, std::string(strategy_name(s))};
  }
  unreachable("strategy table", n);
}

// Residue step: n not divisible by 4^(m/gcd(2,m)).
Result solve_t11(const TheoremFamily& f, Int n, Int threshold) {
  auto finish = [&](Int x, const char* branch) -> std::optional<Result> {
    const Int rest = n - f.a * ipow(x, f.m);
    if (rest < 0 || !is_sum_of_three_squares(rest)) return std::nullopt;
    const auto [p, q, r] = three(rest, branch);
    return Result{{x, r, q, p}, branch};
  };
  if (n < threshold) {
    for (Int x = 0; f.a * ipow(x, f.m) <= n; ++x) {
      if (auto r = finish(x, "base")) return *r;
    }
    unreachable("t11 base", n);
  }
  if (!in_E111(n)) return *finish(0, "three_square");
  const int k = strip_fours(n).k;
  std::optional<Result> r;
  if (k <= 1 || (k == 2 && f.m > 4 && f.a == 4)) {
    r = finish(1, "x1");
  } else if (f.a == 1 && k == 2) {
    r = finish(2, "x2_k2");
  } else if (f.m == 5 && (k == 3 || k == 4)) {
    r = finish(2, "x2_k34");
  }
  if (!r) unreachable("t11 case 3", n);
  return *r;
}

Result solve_t12i(const TheoremFamily& f, Int n) {
  if (n < 16) return {search_base(f, n), "base"};
  if (!in_E112(n)) {
    const auto [a, b, c] = ternary(2, 1, 1, n, "t12i equal");
    return {{a, a, b, c}, "equal"};
  }
  const Int shift = 2 / f.a;
  const auto [t, u, v] = three(n / 2 - shift * shift, "t12i shift");
  return {{t + shift, t - shift, u + v, u - v}, "shift"};
}

Result solve_t12ii(const TheoremFamily& f, Int n) {
  if (n < 64) return {search_base(f, n), "base"};
  for (Int delta : {0, 1, 8}) {
    const Int s = 2 * n - delta * delta * f.c * f.c;
    if (s < 0 || !is_sum_of_three_squares(s)) continue;
    const auto v = three(s, "t12ii");
    // Two of the three share parity; the third is 2x - delta*c.
    static constexpr std::size_t kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& pr : kPairs) {
      const Int y = v[pr[0]];
      const Int z = v[pr[1]];
      if ((y - z) % 2 != 0) continue;
      const Int x = (v[pr[2]] + delta * f.c) / 2;
      return {{x, delta * f.c - x, (y + z) / 2, (y - z) / 2}, "delta" + std::to_string(delta)};
    }
  }
  unreachable("t12ii delta", n);
}

Result solve_t12iii(const TheoremFamily& f, Int n, Int threshold) {
  if (n < threshold) return {search_base(f, n), "base"};
  const Int top = Int{1} << f.m;
  for (Int delta : {Int{0}, Int{1}, top}) {
    const Int e = delta * f.d;
    const Int s = 5 * n - e * e;
    if (s < 0 || !is_sum_of_three_squares(s)) continue;
    const auto v = three(s, "t12iii");
    for (std::size_t i = 0; i < 3; ++i) {
      if ((v[i] * v[i] + e * e) % 5 != 0) continue;
      Int x = v[i];
      Int y = v[i == 0 ? 1 : 0];
      const Int z = v[i == 2 ? 1 : 2];
      if (mod(x - 2 * e, 5) != 0) x = -x;
      if (mod(y - 2 * z, 5) != 0) y = -y;
      const std::string branch = delta == 0 ? "delta0" : delta == 1 ? "delta1" : "delta2m";
      return {{(2 * x + e) / 5, (2 * e - x) / 5, (2 * y + z) / 5, (2 * z - y) / 5}, branch};
    }
  }
  unreachable("t12iii delta", n);
}

Result solve_t12iv(Int n) {
  static constexpr Coords kBase[4] = {{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, -1, 0}};
  if (n < 4) return {kBase[n], "base"};
  const Int m = n % 2 == 1 ? n : n / 2;
  const auto [p, q, r] = ternary(1, 2, 1, m, "t12iv");
  if (n % 2 == 1) return {{p, q, r, -q}, "odd"};
  return {{p + q, r + q, q - p, q - r}, "twice_odd"};
}

Result solve_t13i(const TheoremFamily& f, Int n, Int threshold) {
  if (n < threshold) return {search_base(f, n), "base"};
  const Int top = Int{1} << f.m;
  // 3X^2 + 6Y^2 + b V^2 = v with V = 3z - off; returns (X, Y, z).
  auto shifted = [&](Int b, Int v, Int off) -> std::optional<std::array<Int, 3>> {
    if (v < 0) return std::nullopt;
    auto r = find_ternary(TernaryForm{3, 6, b}, v);
    if (!r) return std::nullopt;
    Int V = (*r)[2];
    if (mod(V + off, 3) != 0) V = -V;
    if (mod(V + off, 3) != 0) return std::nullopt;
    return std::array<Int, 3>{(*r)[0], (*r)[1], (V + off) / 3};
  };
  if (f.c == 1) {
    if (!in_E126(n)) {
      const auto [X, Y, Z] = ternary(1, 2, 6, n, "t13i c1");
      return {{Y + Z, Z - Y, -2 * Z, X}, "c1_delta0"};
    }
    if (f.d == 1) {
      for (Int delta : {Int{1}, top}) {
        const Int v = 3 * n - delta * delta;
        if (v < 0 || in_E236(v)) continue;
        if (auto r = shifted(2, v, delta)) {
          const auto [X, Y, z] = *r;
          return {{Y + z, z - Y, delta - 2 * z, X}, delta == 1 ? "c1_d1_delta1" : "c1_d1_delta2m"};
        }
      }
      unreachable("t13i c1 d1", n);
    }
    if (auto r = shifted(2, 3 * n - 4, 2); r && !in_E236(3 * n - 4)) {
      const auto [X, Y, z] = *r;
      return {{Y + z, z - Y, 2 - 2 * z, X}, "c1_d2"};
    }
    unreachable("t13i c1 d2", n);
  }
  if (!in_E123(n)) {
    const auto [X, Y, Z] = ternary(1, 2, 3, n, "t13i c2");
    return {{Y + Z, Z - Y, -Z, X}, "c2_delta0"};
  }
  if (f.d == 3 || f.d == 6) {
    const Int q = 6 / f.d;
    const auto [X, Y, W] = ternary(1, 2, 3, n - 216 / (f.d * f.d), "t13i s21");
    const Int z = q - W;
    return {{Y + z, z - Y, 18 / f.d - z, X}, "c2_d36"};
  }
  if (f.d == 1) {
    for (Int delta : {Int{1}, top}) {
      const Int v = 6 * n - delta * delta;
      if (v < 0 || in_E236(v)) continue;
      const auto [X, U, V0] = ternary(6, 3, 2, v, "t13i s22");
      const Int y = (U - delta) / 2;
      const Int V = mod(V0 - delta, 3) == 0 ? V0 : -V0;
      const Int z = (V - delta) / 3;
      return {{y + z + delta, z - y, -z, X}, delta == 1 ? "c2_d1_delta1" : "c2_d1_delta2m"};
    }
    unreachable("t13i s22", n);
  }
  const Int base = f.d == 2 ? 1 : 2;  // d = 4 uses the fixed shift 2
  for (Int delta : {base, f.d == 2 ? top : base}) {
    const Int v = 3 * n - 2 * delta * delta;
    if (v < 0 || in_E136(v)) continue;
    const auto [X, Y, V0] = ternary(3, 6, 1, v, "t13i s23");
    const Int V = mod(V0 + delta, 3) == 0 ? V0 : -V0;
    const Int z = (V + delta) / 3;
    const std::string branch =
        f.d == 4 ? "c2_d4" : delta == 1 ? "c2_d2_delta1" : "c2_d2_delta2m";
    return {{Y + z, z - Y, delta - z, X}, branch};
  }
  unreachable("t13i s23", n);
}

Result solve_t13ii(const TheoremFamily& f, Int n) {
  if (n < 16) return {search_base(f, n), "base"};
  Int X = 0;
  Int Y = 0;
  Int Z = 0;
  Int delta = 0;
  std::string branch;
  if (n % 2 == 1 && n <= 2719) {
    branch = "odd_small";
    if (auto r = find_ternary(TernaryForm{2, 5, 5}, 5 * n)) {
      std::tie(X, Y, Z) = std::tuple((*r)[0], (*r)[1], (*r)[2]);
    } else if (auto r8 = find_ternary(TernaryForm{2, 5, 5}, 5 * n - 8)) {
      std::tie(X, Y, Z) = std::tuple((*r8)[0], (*r8)[1], (*r8)[2]);
      delta = 2;
    } else {
      unreachable("t13ii small odd", n);
    }
  } else if (n % 2 == 1 || !in_E1110_even(n)) {
    branch = n % 2 == 1 ? "odd_large" : "even";
    auto r = find_ternary(TernaryForm{10, 1, 1}, n);
    if (!r) {
      if (n % 2 == 1) {
        throw HypothesisFailure("odd n = " + std::to_string(n) + " > 2719 is not x^2+y^2+10z^2");
      }
      unreachable("t13ii even", n);
    }
    X = 5 * (*r)[0];
    Y = (*r)[1];
    Z = (*r)[2];
  } else {
    branch = "even_16l6";
    const auto [x, y, z] = ternary(1, 5, 5, (5 * n - 8) / 2, "t13ii 16l+6");
    X = x;
    Y = y + z;
    Z = y - z;
    delta = 2;
  }
  const Int d2 = delta * delta;
  if (mod(2 * X - 3 * d2, 10) != 0) X = -X;
  const Int w = (2 * X - 3 * d2) / 10;
  return {{3 * w + d2, -w, Y, Z}, branch};
}

Result solve_t13iii(const TheoremFamily& f, Int n) {
  if (n < 1190) return {search_base(f, n), "base"};
  for (Int r = 0; r <= 3; ++r) {
    const Int s = 5 * r * r;
    const Int v = 7 * n - 5 * s * s;
    if (v < 0) continue;
    auto found = find_ternary(TernaryForm{7, 70, 2}, v);
    if (!found) continue;
    const auto [X, Y, Z0] = *found;
    const Int Z = mod(Z0 + s, 7) == 0 ? Z0 : -Z0;
    const Int t = (Z + s) / 7;
    return {{3 * Y + t, 3 * t - Y, s - 2 * t, X}, "r" + std::to_string(r)};
  }
  throw HypothesisFailure("n = " + std::to_string(n) +
                          " is not x^2+10y^2+(2z^2+125r^4)/7 for r in 0..3");
}

Result solve_t14ii(Int n) {
  if (!in_E126(n)) return {sum_rep(n), "x_plus_y_eq_z"};
  const FourKForm fk = strip_fours(n);
  auto r = find_ternary(TernaryForm{1, 1, 13}, fk.m);
  if (!r) {
    throw HypothesisFailure(std::to_string(fk.m) + " is not x^2+y^2+13z^2");
  }
  const Int p = Int{1} << fk.k;
  const auto [x, y, z] = *r;
  return {{3 * p * z, 2 * p * z, p * x, p * y}, "two_x_eq_3y"};
}

Result solve_t14iii(Int n) {
  if (n % 2 == 0) {
    if (auto h = exact_sqrt(n / 2); h && *h > 0) return {{*h, 0, *h, 0}, "twice_square"};
  }
  if (!in_E112(n)) {
    auto [a, b, c] = ternary(2, 1, 1, n, "t14iii");
    if (b == 0) std::swap(b, c);
    return {{a, a, b, c}, "x_eq_y"};
  }
  const Coords s = sum_rep(n);
  if (s[1] > 0) return {{s[2], s[0], s[1], s[3]}, "x_eq_y_plus_z"};
  return {{s[2], s[1], s[0], s[3]}, "x_eq_y_plus_z"};
}

Result solve_t14iv(Int n) {
  if (!in_E111(n)) {
    const auto [p, q, r] = three(n, "t14iv");
    return {{0, p, r, q}, "x_zero"};
  }
  const Coords s = sum_rep(n);
  return {{s[2], s[0], s[1], s[3]}, "x_eq_y_plus_z"};
}

Result solve_t14v(const TheoremFamily& f, Int n) {
  if (!in_E111(n)) {
    const auto [p, q, r] = three(n, "t14v");
    return {{q, r, 0, p}, "z_zero"};
  }
  if (f.variant == 1) return {sum_rep(n), "x_plus_y_eq_z"};
  return {half_sum_rep(n), "x_plus_y_eq_2z"};
}

Result solve_t14vi(const TheoremFamily& f, Int n) {
  if (!in_E111(n)) {
    const auto [p, q, r] = three(n, "t14vi");
    return {{q, 0, r, p}, "y_zero"};
  }
  if (f.variant == 1) {
    const Coords s = sum_rep(n);
    return {{s[0], s[2], s[1], s[3]}, "x_plus_z_eq_y"};
  }
  const auto [W, V, Z] = ternary(1, 2, 3, n, "t14vi");
  return {{V > Z ? V - Z : Z - V, V + Z, Z, W}, "x_eq_abs_y_minus_2z"};
}

Thm12v thm12v(Int n, std::vector<std::string>& branches, int& depth) {
  int k = 0;
  Int zscale = 1;
  while (n >= 4 && n % 4 == 0) {
    n /= 4;
    ++k;
    zscale *= 2;
    ++depth;
    branches.emplace_back("descent");
  }
  Thm12v r;
  if (n <= 3) {
    static constexpr Thm12v kBase[4] = {{}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}};
    r = kBase[n];
    branches.emplace_back("base");
  } else if (n % 4 == 1) {
    const auto [x, y, z] = ternary(16, 4, 1, n - 4, "t12v mod 1");
    r = {1, x, y, z};
    branches.emplace_back("mod4_1");
  } else {
    const auto [x, y, z] = ternary(4, 1, 1, n - 1, "t12v mod 2,3");
    r = {0, x, y, z};
    branches.emplace_back("mod4_23");
  }
  r.k += k;
  r.z *= zscale;
  return r;
}

}  // namespace

Construction build(const TheoremFamily& f, Int n) {
  using Id = TheoremFamily::Id;
  require_in_cap(n);
  if (n < f.n_min()) {
    throw std::invalid_argument(f.to_string() + " requires n >= " + std::to_string(f.n_min()));
  }
  Construction out;
  if (f.id == Id::T12v) {
    const Thm12v r = thm12v(n, out.branches, out.depth);
    out.coords = {r.k, r.x, r.y, r.z};
    out.witness.t = r.k;
    out.witness.value = n;
    return out;
  }

  // Descent modulus, coordinate scale per level, and the smallest n that descends.
  Int modulus = 0;
  Int scale = 1;
  Int x_scale = 1;
  Int floor = 0;
  switch (f.id) {
    case Id::T11: {
      const int g = f.m % 2 == 0 ? 2 : 1;
      modulus = Int{1} << (2 * f.m / g);
      scale = Int{1} << (f.m / g);
      x_scale = Int{1} << (2 / g);
      floor = modulus;
      break;
    }
    case Id::T12i: modulus = 16; scale = 4; floor = 16; break;
    case Id::T12ii: modulus = 64; scale = 8; floor = 64; break;
    case Id::T12iii:
    case Id::T13i:
      modulus = Int{1} << (2 * f.m);
      scale = Int{1} << f.m;
      floor = modulus;
      break;
    case Id::T12iv: modulus = 4; scale = 2; floor = 4; break;
    case Id::T13ii: modulus = 16; scale = 4; floor = 16; break;
    case Id::T13iii: modulus = 16; scale = 4; floor = 1190; break;
    default: break;
  }
  if (f.id != Id::T11) x_scale = scale;
  Int factor = 1;
  Int x_factor = 1;
  if (modulus != 0) {
    while (n >= floor && n % modulus == 0) {
      n /= modulus;
      factor *= scale;
      x_factor *= x_scale;
      ++out.depth;
      out.branches.emplace_back("descent");
    }
  }

  Result r;
  switch (f.id) {
    case Id::T11: r = solve_t11(f, n, modulus); break;
    case Id::T12i: r = solve_t12i(f, n); break;
    case Id::T12ii: r = solve_t12ii(f, n); break;
    case Id::T12iii: r = solve_t12iii(f, n, modulus); break;
    case Id::T12iv: r = solve_t12iv(n); break;
    case Id::T13i: r = solve_t13i(f, n, modulus); break;
    case Id::T13ii: r = solve_t13ii(f, n); break;
    case Id::T13iii: r = solve_t13iii(f, n); break;
    case Id::T14i: {
      const auto& e = kProducts.at(static_cast<std::size_t>(f.index));
      r = by_strategies(e.strategies, n);
      break;
    }
    case Id::T14ii: r = solve_t14ii(n); break;
    case Id::T14iii: r = solve_t14iii(n); break;
    case Id::T14iv: r = solve_t14iv(n); break;
    case Id::T14v: r = solve_t14v(f, n); break;
    case Id::T14vi: r = solve_t14vi(f, n); break;
    case Id::T15: {
      const auto& e = kQuadratics.at(static_cast<std::size_t>(f.index));
      r = by_strategies(e.strategies, n);
      break;
    }
    case Id::T12v: break;
  }
  out.branches.push_back(r.branch);
  out.coords = r.coords;
  out.coords[0] = checked_mul(out.coords[0], x_factor);
  for (std::size_t i = 1; i < 4; ++i) out.coords[i] = checked_mul(out.coords[i], factor);
  return out;
}

}  // namespace foursq::detail
