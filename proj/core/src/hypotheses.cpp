#include <stdexcept>

#include "foursq/scanner.hpp"
#include "foursq/ternary.hpp"

namespace foursq {

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Ramanujan11_10: return "ramanujan_1_1_10";
    case Hypothesis::Thm13iiiForm: return "thm13iii_form";
    case Hypothesis::Containment1_4: return "containment_1_4";
  }
  return "?";
}

Hypothesis parse_hypothesis(std::string_view name) {
  for (auto h : {Hypothesis::Ramanujan11_10, Hypothesis::Thm13iiiForm, Hypothesis::Containment1_4}) {
    if (to_string(h) == name) return h;
  }
  throw std::invalid_argument("unknown hypothesis: " + std::string(name));
}

std::vector<Int> verify_hypothesis(Hypothesis h, Int bound) {
  require_in_cap(bound);
  std::vector<Int> out;
  if (bound < 0) return out;
  switch (h) {
    case Hypothesis::Ramanujan11_10: {
      const auto rep = representable_table(TernaryForm{1, 1, 10}, bound);
      for (Int n = 1; n <= bound; n += 2) {
        if (!rep[static_cast<std::size_t>(n)]) out.push_back(n);
      }
      break;
    }
    case Hypothesis::Containment1_4: {
      const auto rep = representable_table(TernaryForm{1, 1, 13}, bound);
      for (Int n = 5; n <= bound; n += 8) {
        if (!rep[static_cast<std::size_t>(n)]) out.push_back(n);
      }
      break;
    }
    case Hypothesis::Thm13iiiForm: {
      // 7n = 7x^2 + 70y^2 + 2z^2 + 125r^4.
      for (Int n = 1190; n <= bound; ++n) {
        if (n % 16 == 0) continue;
        bool ok = false;
        for (Int r = 0; r <= 3 && !ok; ++r) {
          const Int v = checked_mul(7, n) - 125 * r * r * r * r;
          ok = v >= 0 && find_ternary(TernaryForm{7, 70, 2}, v).has_value();
        }
        if (!ok) out.push_back(n);
      }
      break;
    }
  }
  return out;
}

}  // namespace foursq
