#pragma once

#include <cstdint>

#include "padelic/rational.hpp"

namespace padelic {

// A place of Q: a finite prime p or the archimedean place at infinity.
class Place {
 public:
  static Place infinity() { return Place(0); }
  static Place at(std::int64_t p);  // validates primality

  bool is_infinite() const { return p_ == 0; }
  std::int64_t prime() const;  // throws std::logic_error for the infinite place

 private:
  explicit Place(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

/// Exponent of p in x. Throws std::domain_error for x = 0,
/// std::invalid_argument for nonprime p.
long ord_p(const Rational& x, std::int64_t p);

/// |x|_p = p^(-ord_p x) at finite places, the usual absolute value at
/// infinity, and |0|_v = 0. Exact.
Rational abs_v(const Rational& x, const Place& place);

/// Product of |x|_p over every prime dividing numerator or denominator,
/// times |x|_inf. Equals 1 for every nonzero rational.
Rational artin_whaples_product(const Rational& x);

}  // namespace padelic
