#include "padelic/veneziano.hpp"

#include <cmath>
#include <stdexcept>

#include "padelic/primes.hpp"

namespace padelic {

double veneziano_amplitude(std::int64_t p, double a, double b) {
  require_prime(p, "veneziano_amplitude");
  if (!(a > -1.0 && b > -1.0 && a + b < -1.0))
    throw std::domain_error(
        "veneziano_amplitude: need a > -1, b > -1, a + b < -1");
  const double pd = static_cast<double>(p);
  // Geometric series over the spheres |x| = p^n (n >= 1), |x| = p^-n
  // (n >= 1) and |1 - x| = p^-n (n >= 1); plus the units away from 1.
  const double t1 = std::pow(pd, a + b + 1.0);
  const double t2 = std::pow(pd, -(a + 1.0));
  const double t3 = std::pow(pd, -(b + 1.0));
  return (1.0 - 1.0 / pd) *
             (t1 / (1.0 - t1) + t2 / (1.0 - t2) + t3 / (1.0 - t3)) +
         (pd - 2.0) / pd;
}

}  // namespace padelic
