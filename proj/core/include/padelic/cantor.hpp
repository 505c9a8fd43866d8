#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padelic/rational.hpp"

namespace padelic {

// Digit test for the p-adic Cantor set (odd p): a p-adic integer lies in the
// set iff every digit of its expansion is even.
struct CantorMembership {
  bool inside = false;
  long first_odd_digit = -1;  // meaningful when !inside
};

/// Checks the first `depth` digits of x (denominator coprime to p).
CantorMembership cantor_set_membership(const Rational& x, std::int64_t p, int depth);

/// sum a_i p^-i -> sum a_i p^i: the value of the given base-p digit string
/// as a p-adic integer (exact, mod p^N for N digits).
Int homeomorphism_map(const std::vector<std::int64_t>& digits, std::int64_t p);

}  // namespace padelic
