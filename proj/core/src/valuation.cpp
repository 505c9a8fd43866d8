#include "padelic/valuation.hpp"

#include <stdexcept>

#include "padelic/primes.hpp"

namespace padelic {
namespace {

long ord_of_int(Int n, const Int& p) {
  long e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

Place Place::at(std::int64_t p) {
  require_prime(p, "Place::at");
  return Place(p);
}

std::int64_t Place::prime() const {
  if (is_infinite()) throw std::logic_error("Place::prime on the infinite place");
  return p_;
}

long ord_p(const Rational& x, std::int64_t p) {
  require_prime(p, "ord_p");
  if (x == 0) throw std::domain_error("ord_p of zero is undefined");
  const Int pp(p);
  return ord_of_int(numerator(x), pp) - ord_of_int(denominator(x), pp);
}

Rational abs_v(const Rational& x, const Place& place) {
  if (x == 0) return Rational(0);
  if (place.is_infinite()) return x < 0 ? Rational(-x) : x;
  return rational_pow(Rational(place.prime()), -ord_p(x, place.prime()));
}

Rational artin_whaples_product(const Rational& x) {
  if (x == 0) throw std::domain_error("artin_whaples_product of zero is undefined");
  Rational product = abs_v(x, Place::infinity());
  for (const auto& [p, e] : factorize(numerator(x)))
    product *= rational_pow(Rational(p), -long(e));
  for (const auto& [p, e] : factorize(denominator(x)))
    product *= rational_pow(Rational(p), long(e));
  return product;
}

}  // namespace padelic
