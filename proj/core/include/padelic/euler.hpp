#pragma once

#include <complex>
#include <cstdint>

#include "padelic/rational.hpp"

namespace padelic {

/// prod_{p <= p_max} sum_{j <= j_max} p^(-js), exact. Equals the Dirichlet
/// sum over {p_max}-smooth numbers with exponents capped at j_max.
Rational euler_partial_product_exact(long s, std::int64_t p_max, int j_max);

std::complex<double> euler_partial_product(std::complex<double> s,
                                           std::int64_t p_max, int j_max);

/// Square of the Euler partial product (harmonic x Euler string).
Rational euler_riemann_partial_exact(long s, std::int64_t p_max, int j_max);
std::complex<double> euler_riemann_partial(std::complex<double> s,
                                           std::int64_t p_max, int j_max);

}  // namespace padelic
