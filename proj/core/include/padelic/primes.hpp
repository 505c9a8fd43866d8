#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "padelic/rational.hpp"

namespace padelic {

/// Deterministic trial-division test; exact for all int64 inputs.
bool is_prime(std::int64_t n);

/// Throws std::invalid_argument naming `what` when p is not prime.
void require_prime(std::int64_t p, const char* what);

/// Sieve of Eratosthenes, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<Int, int>> factorize(Int n);

}  // namespace padelic
