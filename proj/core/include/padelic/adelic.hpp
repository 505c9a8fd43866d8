#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padelic/rational.hpp"

namespace padelic {

// The two adelic products with a closed factor list: the dimension-1/2
// string over every prime, and the Cantor-Smith product (general Cantor
// string of base m times every p-adic Cantor string).
struct AdelicFamily {
  enum class Kind { l_half, cantor_smith };
  Kind kind = Kind::l_half;
  std::int64_t smith_base = 3;

  static AdelicFamily l_half() { return {}; }
  static AdelicFamily cantor_smith(std::int64_t m);
  std::string name() const;
};

// Every factor evaluated exactly at s = 1; each equals 1 and so does the
// product (for these families that holds at every prime, so the finite
// window certifies the full product).
struct AdelicAtOne {
  std::vector<std::pair<std::string, Rational>> factors;
  Rational product;
};
AdelicAtOne adelic_eval_at_one(const AdelicFamily& family, std::int64_t p_max = 100);

enum class Trend { to_zero, to_infinity, stable };
std::string trend_name(Trend t);

struct AdelicPartial {
  double log_abs = 0;  // log of |product|
  int sign = 1;
  double value = 0;
  std::optional<Rational> exact;  // set on the exact s = 1 path
  Trend trend = Trend::stable;
};

/// Partial product over p <= p_max at real s, with a log-slope trend
/// classification. Exactly 1 and stable at s = 1.
AdelicPartial adelic_partial_product(const AdelicFamily& family, double s,
                                     std::int64_t p_max);

}  // namespace padelic
