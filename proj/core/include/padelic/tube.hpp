#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "padelic/fractal_string.hpp"
#include "padelic/rational.hpp"

namespace padelic {

// One point of the geometric wave: volume of the inner eps-neighborhood and
// the normalized ratio g = V / eps^(1-D).
struct TubeSample {
  double log_eps = 0;
  double eps = 0;
  double volume = 0;
  double ratio = 0;
  bool jump = false;
};

struct JumpPointError : std::domain_error {
  JumpPointError(double log_eps_, long index_)
      : std::domain_error("epsilon at the jump point l_" + std::to_string(index_) +
                          " (series converges to the midpoint there)"),
        log_eps(log_eps_),
        index(index_) {}
  double log_eps;
  long index;
};

/// V(eps) = (1/p) sum_{l_j <= eps} mu_j l_j, exact. Defined for the
/// nonarchimedean families with D < 1; 0 < eps <= 1.
Rational volume_direct(const FractalStringDesc& desc, const Rational& eps);

enum class Smoothing { none, cesaro };

/// Truncated complex-dimension expansion sum_|n|<=N (res/p) eps^(1-w)/(1-w)
/// with conjugate pairs combined (output is real by construction); optional
/// Fejer weights. Throws JumpPointError within 1e-9 (in log eps) of a jump.
double volume_series(const FractalStringDesc& desc, double eps, long n_terms,
                     Smoothing smoothing = Smoothing::cesaro);

/// Exact rational check of V(eps/q) == (r/q) V(eps) at 50 seeded random
/// epsilon in (l_first, 1) plus a deterministic sweep across (0, 1)
/// including the jump points themselves.
bool scaling_identity_check(const FractalStringDesc& desc, int random_samples = 50,
                            unsigned long seed = 0x5eed);

// Average Minkowski content coefficient / log(log_arg), exact symbolic pair.
struct AverageContent {
  Rational coefficient;
  Rational log_arg;
  bool dimension_zero = false;  // D = 0 families, where g is V/eps
  double value() const;
};

/// res(zeta; D) / (p (1 - D)) in the exact form C_res / (p log(q/r)).
AverageContent average_content_closed(const FractalStringDesc& desc);

/// Cesaro logarithmic average of V(eps) eps^(D-1) over `whole_periods` full
/// multiplicative periods [q^-(start_scale+K), q^-start_scale], integrating
/// each constant piece in closed form. Full-period averaging is exact.
double average_content_numeric(const FractalStringDesc& desc, int start_scale,
                               int whole_periods);

struct ContentReport {
  double m_av_closed = 0;
  double m_av_numeric = 0;
  double sup = 0;  // of g over one multiplicative period
  double inf = 0;
  Rational ratio;  // sup/inf = q/r exactly
  std::string verdict;  // "not measurable" iff sup/inf > 1 + 1e-9
  bool dimension_zero = false;
};

/// Oscillation witness: g attains [inf, sup] on every period with
/// sup/inf = q^(1-D) = q/r > 1, so the Minkowski content does not exist.
ContentReport nonmeasurability_witness(const FractalStringDesc& desc);

struct GridSpec {
  double lo = 0;
  double hi = 1;
  long points = 1;
};

/// Log-uniform samples of (ln eps, eps, V, g), ascending in eps; rows within
/// 1e-9 (in ln eps) of a jump are flagged.
std::vector<TubeSample> wave_table(const FractalStringDesc& desc, const GridSpec& grid);

}  // namespace padelic
