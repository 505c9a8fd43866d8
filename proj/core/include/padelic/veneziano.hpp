#pragma once

#include <cstdint>

namespace padelic {

/// The per-prime open-string amplitude integral_{Q_p} |x|^a |1-x|^b dx in
/// closed form, from the decomposition of Q_p into spheres on which both
/// norms are constant. Convergence region a > -1, b > -1, a + b < -1;
/// outside it throws std::domain_error. Symmetric in (a, b).
double veneziano_amplitude(std::int64_t p, double a, double b);

}  // namespace padelic
