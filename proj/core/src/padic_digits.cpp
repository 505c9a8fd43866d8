#include "padelic/padic_digits.hpp"

#include <stdexcept>

#include "padelic/primes.hpp"
#include "padelic/valuation.hpp"

namespace padelic {
namespace {

// x mod p for a rational with denominator invertible mod p, result in [0, p).
std::int64_t residue_mod_p(const Rational& x, std::int64_t p) {
  const Int pp(p);
  Int num = numerator(x) % pp;
  if (num < 0) num += pp;
  Int den = denominator(x) % pp;
  // den^(p-2) mod p by square-and-multiply (p prime, den nonzero mod p)
  Int inv = 1, base = den, e = p - 2;
  while (e > 0) {
    if (e % 2 == 1) inv = inv * base % pp;
    base = base * base % pp;
    e /= 2;
  }
  return static_cast<std::int64_t>(num * inv % pp);
}

}  // namespace

std::vector<std::int64_t> PAdicDigits::coefficients(std::size_t count) const {
  if (start < 0) throw std::logic_error("coefficients: expansion starts below p^0");
  std::vector<std::int64_t> out(count, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::size_t j = static_cast<std::size_t>(start) + i;
    if (j < count) out[j] = digits[i];
  }
  return out;
}

Rational PAdicDigits::truncated_value() const {
  Rational value(0);
  const Rational p(prime);
  for (std::size_t i = digits.size(); i-- > 0;)
    value = value * p + Rational(digits[i]);
  return value * rational_pow(p, start);
}

PAdicDigits digits_of(const Rational& x, std::int64_t p, int n_digits) {
  require_prime(p, "digits_of");
  if (n_digits < 1) throw std::invalid_argument("digits_of: need at least one digit");
  if (denominator(x) % Int(p) == 0)
    throw std::domain_error("digits_of: not a p-adic integer (denominator divisible by p)");

  PAdicDigits out;
  out.prime = p;
  out.precision = n_digits;

  std::vector<std::int64_t> coeff(static_cast<std::size_t>(n_digits), 0);
  Rational y = x;
  for (int j = 0; j < n_digits; ++j) {
    if (y == 0) break;
    const std::int64_t a = residue_mod_p(y, p);
    coeff[static_cast<std::size_t>(j)] = a;
    y = (y - Rational(a)) / Rational(p);  // numerator divisible by p, still integral at p
  }

  std::size_t first = 0;
  while (first < coeff.size() && coeff[first] == 0) ++first;
  if (first == coeff.size()) {
    out.start = 0;  // zero mod p^n
    return out;
  }
  out.start = static_cast<long>(first);
  out.digits.assign(coeff.begin() + static_cast<long>(first), coeff.end());
  return out;
}

PAdicDigits qp_expansion(const Rational& x, std::int64_t p, int n_digits) {
  require_prime(p, "qp_expansion");
  if (x == 0) throw std::domain_error("qp_expansion: zero has no leading digit");
  const long v = ord_p(x, p);
  PAdicDigits unit = digits_of(x * rational_pow(Rational(p), -v), p, n_digits);
  unit.start += v;
  unit.precision += v;
  return unit;
}

}  // namespace padelic
