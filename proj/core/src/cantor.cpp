#include "padelic/cantor.hpp"

#include <stdexcept>

#include "padelic/padic_digits.hpp"
#include "padelic/primes.hpp"

namespace padelic {

CantorMembership cantor_set_membership(const Rational& x, std::int64_t p, int depth) {
  require_prime(p, "cantor_set_membership");
  if (p == 2)
    throw std::invalid_argument("cantor_set_membership: the digit test needs odd p");
  if (depth < 1) throw std::invalid_argument("cantor_set_membership: depth must be >= 1");
  const auto coeff = digits_of(x, p, depth).coefficients(static_cast<std::size_t>(depth));
  for (std::size_t j = 0; j < coeff.size(); ++j)
    if (coeff[j] % 2 != 0) return {false, static_cast<long>(j)};
  return {true, -1};
}

Int homeomorphism_map(const std::vector<std::int64_t>& digits, std::int64_t p) {
  require_prime(p, "homeomorphism_map");
  for (std::int64_t d : digits)
    if (d < 0 || d >= p) throw std::invalid_argument("homeomorphism_map: digit out of [0, p)");
  Int value(0);
  for (std::size_t i = digits.size(); i-- > 0;) value = value * p + digits[i];
  return value;
}

}  // namespace padelic
