#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace foursq {

using Int = std::int64_t;
/// Polynomial values of degree-4 forms at coordinates up to 2^20 reach 2^80.
using Wide = __int128;

/// Largest n accepted by searches, constructions and scans.
inline constexpr Int kMaxN = Int{1} << 40;

/// Throws std::invalid_argument for n < 0 and OverflowError for n > kMaxN.
void require_in_cap(Int n);

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Wide checked_add(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);

/// Narrowing that throws OverflowError instead of truncating.
Int to_int(Wide v);

std::string to_string(Wide v);

/// floor(sqrt(n)) by integer Newton iteration.
std::uint64_t isqrt(std::uint64_t n);

/// floor(v^(1/m)) for v >= 0 and 1 <= m <= 6.
unsigned __int128 iroot(unsigned __int128 v, int m);

/// n = 4^k * m with 4 not dividing m.
struct FourKForm {
  int k = 0;
  Int m = 0;

  friend bool operator==(const FourKForm&, const FourKForm&) = default;
};

/// Requires n >= 1.
FourKForm strip_fours(Int n);

/// Target shapes of the form scale * t^exponent.
///
/// Roots of even exponent are reported nonnegative. Roots of odd exponent may be
/// negative unless `nonneg` is set. `even_root` additionally requires t even.
/// A zero class accepts exactly 0.
class PowerClass {
 public:
  enum class Kind { Zero, Square, EvenSquare, TwiceSquare, Cube, NonnegCube, KthPower, ScaledPower };

  static PowerClass zero();
  static PowerClass square() { return scaled(1, 2); }
  static PowerClass even_square();
  static PowerClass twice_square() { return scaled(2, 2); }
  static PowerClass cube() { return scaled(1, 3); }
  static PowerClass nonneg_cube() { return scaled(1, 3, true); }
  static PowerClass kth_power(int m) { return scaled(1, m); }
  /// Throws std::invalid_argument unless scale >= 1 and 2 <= m <= 6.
  static PowerClass scaled(Int scale, int m, bool nonneg = false);

  Kind kind() const;
  bool is_zero() const { return zero_; }
  Int scale() const { return scale_; }
  int exponent() const { return exponent_; }
  bool nonneg_root() const { return nonneg_ || exponent_ % 2 == 0; }
  bool even_root() const { return even_root_; }

  /// Same class with the scale multiplied by `factor` (denominator clearing).
  PowerClass rescaled(Int factor) const;

  /// DSL spelling: zero, square, even_square, twice_square, cube, nonneg_cube,
  /// powerK, or d*<base>.
  std::string to_string() const;

  friend bool operator==(const PowerClass&, const PowerClass&) = default;

 private:
  bool zero_ = false;
  Int scale_ = 1;
  int exponent_ = 2;
  bool nonneg_ = false;
  bool even_root_ = false;
};

/// The root t with v = scale * t^m, if one exists in the class. For even m the
/// nonnegative root is returned; odd m has a unique root.
std::optional<Int> is_in_power_class(Wide v, const PowerClass& cls);

/// True iff n is not of the form 4^k(8l+7).
bool is_sum_of_three_squares(Int n);

/// (x, y, z) with x >= y >= z >= 0 and x^2+y^2+z^2 = n, choosing the
/// lexicographically largest x, then y. Empty when n is a 4^k(8l+7) value.
std::optional<std::array<Int, 3>> three_square_decompose(Int n);

/// floor(sqrt(n)) if n is a perfect square.
std::optional<Int> exact_sqrt(Int n);

}  // namespace foursq
