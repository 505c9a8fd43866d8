#pragma once

#include <cstdint>
#include <vector>

#include "padelic/rational.hpp"

namespace padelic {

// Truncated p-adic expansion x = sum digits[i] * p^(start+i). The first
// stored digit is nonzero except for the zero value (empty digit list).
struct PAdicDigits {
  std::int64_t prime = 2;
  long start = 0;       // exponent of digits[0]
  long precision = 0;   // coefficients are trusted for exponents < precision
  std::vector<std::int64_t> digits;

  /// Coefficients a_0 .. a_{count-1} of sum a_j p^j; requires start >= 0.
  std::vector<std::int64_t> coefficients(std::size_t count) const;

  /// sum digits[i] * p^(start+i), exact.
  Rational truncated_value() const;
};

/// First n digits of a p-adic integer (denominator coprime to p); the result
/// satisfies x == truncated_value() mod p^n. Throws std::domain_error when
/// the denominator is divisible by p.
PAdicDigits digits_of(const Rational& x, std::int64_t p, int n_digits);

/// Expansion of any nonzero rational in Q_p: scales by p^(-ord_p x) first,
/// so `start` may be negative. n_digits counted from the leading digit.
PAdicDigits qp_expansion(const Rational& x, std::int64_t p, int n_digits);

}  // namespace padelic
