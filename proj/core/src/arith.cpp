#include "foursq/arith.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "foursq/errors.hpp"

namespace foursq {

namespace {

using U128 = unsigned __int128;

int bit_length(U128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 128 - std::countl_zero(hi);
  return 64 - std::countl_zero(static_cast<std::uint64_t>(v));
}

// v^m, saturating at the U128 maximum.
U128 pow_saturating(U128 base, int m) {
  U128 r = 1;
  for (int i = 0; i < m; ++i) {
    U128 next;
    if (__builtin_mul_overflow(r, base, &next)) return std::numeric_limits<U128>::max();
    r = next;
  }
  return r;
}

}  // namespace

void require_in_cap(Int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative, got " + std::to_string(n));
  if (n > kMaxN) throw OverflowError("n = " + std::to_string(n) + " exceeds the cap 2^40");
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit addition overflow");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit subtraction overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit multiplication overflow");
  return r;
}

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
  return r;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
  return r;
}

Int to_int(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw OverflowError("value " + to_string(v) + " does not fit in 64 bits");
  }
  return static_cast<Int>(v);
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Negate in unsigned space so the minimum value survives.
  U128 u = negative ? U128{0} - static_cast<U128>(v) : static_cast<U128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  // Start above the root; Newton's iterates then decrease monotonically to floor(sqrt(n)).
  const int bits = 64 - std::countl_zero(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  // Correction step.
  while (static_cast<U128>(x) * x > n) --x;
  while (static_cast<U128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

U128 iroot(U128 v, int m) {
  if (m < 1 || m > 6) throw std::invalid_argument("iroot exponent must be in 1..6");
  if (m == 1 || v < 2) return v;
  if (m == 2 && (v >> 64) == 0) return isqrt(static_cast<std::uint64_t>(v));
  const int bits = bit_length(v);
  U128 x = U128{1} << ((bits + m - 1) / m);
  while (true) {
    const U128 p = pow_saturating(x, m - 1);
    const U128 y = (static_cast<U128>(m - 1) * x + v / p) / static_cast<U128>(m);
    if (y >= x) break;
    x = y;
  }
  while (pow_saturating(x, m) > v) --x;
  while (pow_saturating(x + 1, m) <= v) ++x;
  return x;
}

FourKForm strip_fours(Int n) {
  if (n < 1) throw std::invalid_argument("strip_fours requires n >= 1");
  FourKForm f{0, n};
  while (f.m % 4 == 0) {
    f.m /= 4;
    ++f.k;
  }
  return f;
}

PowerClass PowerClass::zero() {
  PowerClass c;
  c.zero_ = true;
  c.scale_ = 1;
  c.exponent_ = 1;
  return c;
}

PowerClass PowerClass::even_square() {
  PowerClass c = scaled(1, 2);
  c.even_root_ = true;
  return c;
}

PowerClass PowerClass::scaled(Int scale, int m, bool nonneg) {
  if (scale < 1) throw std::invalid_argument("power class scale must be positive");
  if (m < 2 || m > 6) throw std::invalid_argument("power class exponent must be in 2..6");
  PowerClass c;
  c.scale_ = scale;
  c.exponent_ = m;
  // Even exponents are sign-free already; keep a single spelling.
  c.nonneg_ = nonneg && m % 2 == 1;
  return c;
}

PowerClass::Kind PowerClass::kind() const {
  if (zero_) return Kind::Zero;
  if (scale_ == 1 && exponent_ == 2) return even_root_ ? Kind::EvenSquare : Kind::Square;
  if (even_root_) return Kind::ScaledPower;
  if (scale_ == 2 && exponent_ == 2) return Kind::TwiceSquare;
  if (scale_ == 1 && exponent_ == 3) return nonneg_ ? Kind::NonnegCube : Kind::Cube;
  if (scale_ == 1 && !nonneg_) return Kind::KthPower;
  return Kind::ScaledPower;
}

PowerClass PowerClass::rescaled(Int factor) const {
  if (zero_) return *this;
  PowerClass c = *this;
  c.scale_ = checked_mul(scale_, factor);
  return c;
}

std::string PowerClass::to_string() const {
  if (zero_) return "zero";
  std::string base;
  Int scale = scale_;
  if (exponent_ == 2 && even_root_) {
    base = "even_square";
  } else if (exponent_ == 2 && scale == 2) {
    base = "twice_square";
    scale = 1;
  } else if (exponent_ == 2) {
    base = "square";
  } else if (exponent_ == 3) {
    base = nonneg_ ? "nonneg_cube" : "cube";
  } else {
    base = "power" + std::to_string(exponent_);
  }
  if (scale == 1) return base;
  return std::to_string(scale) + "*" + base;
}

std::optional<Int> is_in_power_class(Wide v, const PowerClass& cls) {
  if (cls.is_zero()) {
    if (v == 0) return Int{0};
    return std::nullopt;
  }
  const Wide d = cls.scale();
  if (v % d != 0) return std::nullopt;
  const Wide q = v / d;
  const int m = cls.exponent();
  if (m % 2 == 0) {
    if (q < 0) return std::nullopt;
    const U128 r = iroot(static_cast<U128>(q), m);
    if (pow_saturating(r, m) != static_cast<U128>(q)) return std::nullopt;
    if (cls.even_root() && r % 2 != 0) return std::nullopt;
    return static_cast<Int>(r);
  }
  const bool negative = q < 0;
  if (negative && cls.nonneg_root()) return std::nullopt;
  const U128 mag = negative ? U128{0} - static_cast<U128>(q) : static_cast<U128>(q);
  const U128 r = iroot(mag, m);
  if (pow_saturating(r, m) != mag) return std::nullopt;
  if (cls.even_root() && r % 2 != 0) return std::nullopt;
  const Int t = static_cast<Int>(r);
  return negative ? -t : t;
}

bool is_sum_of_three_squares(Int n) {
  if (n < 0) return false;
  if (n == 0) return true;
  return strip_fours(n).m % 8 != 7;
}

std::optional<Int> exact_sqrt(Int n) {
  if (n < 0) return std::nullopt;
  const auto r = static_cast<Int>(isqrt(static_cast<std::uint64_t>(n)));
  if (r * r == n) return r;
  return std::nullopt;
}

std::optional<std::array<Int, 3>> three_square_decompose(Int n) {
  if (n < 0) throw std::invalid_argument("three_square_decompose requires n >= 0");
  if (!is_sum_of_three_squares(n)) return std::nullopt;
  for (auto x = static_cast<Int>(isqrt(static_cast<std::uint64_t>(n))); 3 * x * x >= n; --x) {
    const Int rx = n - x * x;
    Int y = std::min<Int>(x, static_cast<Int>(isqrt(static_cast<std::uint64_t>(rx))));
    for (; 2 * y * y >= rx; --y) {
      if (auto z = exact_sqrt(rx - y * y)) return std::array<Int, 3>{x, y, *z};
    }
  }
  // Unreachable: Gauss-Legendre guarantees a decomposition.
  throw std::logic_error("three-square decomposition not found for " + std::to_string(n));
}

}  // namespace foursq
