#include "padelic/euler.hpp"

#include <cmath>
#include <stdexcept>

#include "padelic/primes.hpp"

namespace padelic {
namespace {

void check_args(long s_sign_only, std::int64_t p_max, int j_max) {
  (void)s_sign_only;
  if (p_max < 0) throw std::invalid_argument("euler product: negative prime bound");
  if (j_max < 0) throw std::invalid_argument("euler product: negative factor truncation");
}

}  // namespace

Rational euler_partial_product_exact(long s, std::int64_t p_max, int j_max) {
  check_args(s, p_max, j_max);
  if (s < 1) throw std::invalid_argument("euler product: exact path needs integer s >= 1");
  Rational product(1);
  for (std::int64_t p : primes_up_to(p_max)) {
    Rational factor(0);
    const Rational step = rational_pow(Rational(1, p), s);
    Rational term(1);
    for (int j = 0; j <= j_max; ++j) {
      factor += term;
      term *= step;
    }
    product *= factor;
  }
  return product;
}

std::complex<double> euler_partial_product(std::complex<double> s,
                                           std::int64_t p_max, int j_max) {
  check_args(0, p_max, j_max);
  std::complex<double> product(1, 0);
  for (std::int64_t p : primes_up_to(p_max)) {
    std::complex<double> factor(0, 0);
    const double lp = std::log(static_cast<double>(p));
    for (int j = 0; j <= j_max; ++j)
      factor += std::exp(-s * (static_cast<double>(j) * lp));
    product *= factor;
  }
  return product;
}

Rational euler_riemann_partial_exact(long s, std::int64_t p_max, int j_max) {
  const Rational v = euler_partial_product_exact(s, p_max, j_max);
  return v * v;
}

std::complex<double> euler_riemann_partial(std::complex<double> s,
                                           std::int64_t p_max, int j_max) {
  const std::complex<double> v = euler_partial_product(s, p_max, j_max);
  return v * v;
}

}  // namespace padelic
