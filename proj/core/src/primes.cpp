#include "padelic/primes.hpp"

#include <stdexcept>
#include <string>

namespace padelic {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::int64_t p, const char* what) {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) +
                                " is not prime");
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j >= 0 && j <= bound; j += i)
      composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 0) n = -n;
  if (n <= 1) return {};
  std::vector<std::pair<Int, int>> out;
  const auto strip = [&](const Int& d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  };
  strip(2);
  for (Int d = 3; d * d <= n; d += 2) strip(d);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace padelic
