#include "padelic/tube.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "padelic/zeta.hpp"

namespace padelic {
namespace {

void require_tube_family(const FractalStringDesc& d) {
  if (d.world() == World::archimedean)
    throw std::invalid_argument(d.name() +
                                ": no tube formula for archimedean strings here");
  if (d.family() == Family::harmonic)
    throw std::invalid_argument("harmonic string has no tube formula");
  if (d.degenerate() && d.family() == Family::rational_dim)
    throw std::invalid_argument(d.name() + ": empty string (k = m) has no tube formula");
}

// Smallest index n >= first with l_n = q^-n <= eps; eps in (0, 1].
long first_included_index(const FractalStringDesc& d, const Rational& eps) {
  const auto [q, r, c] = d.lattice();
  long n = d.first_index();
  Rational scaled = eps * rational_pow(Rational(q), n);
  while (scaled < 1) {
    scaled *= Rational(q);
    ++n;
  }
  return n;
}

struct TubeScales {
  double dim;     // D
  double period;  // 2 pi / log q
  double res;     // residue of zeta at D
  double log_q;
  double prime;
};

TubeScales scales_of(const FractalStringDesc& d) {
  const ZetaClosedForm z = zeta_of(d);
  const Dimension dim = dimension(z);
  const Residue res = residue_at(z);
  return {dim.value, dim.period, res.value(),
          std::log(to_double(z.single().base)), static_cast<double>(d.prime())};
}

// Index of the jump whose log is within tol of u, or 0 when none.
long nearby_jump(const FractalStringDesc& d, double u, double tol) {
  const double lq = std::log(to_double(d.lattice().q));
  const long n = std::lround(-u / lq);
  if (n < d.first_index()) return 0;
  return std::abs(u + static_cast<double>(n) * lq) < tol ? n : 0;
}

}  // namespace

Rational volume_direct(const FractalStringDesc& desc, const Rational& eps) {
  require_tube_family(desc);
  if (eps <= 0 || eps > 1)
    throw std::invalid_argument("volume_direct: epsilon must be in (0, 1]");
  const long n = first_included_index(desc, eps);
  return desc.tail_length(n - 1) / Rational(desc.prime());
}

double volume_series(const FractalStringDesc& desc, double eps, long n_terms,
                     Smoothing smoothing) {
  require_tube_family(desc);
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("volume_series: epsilon must be in (0, 1)");
  if (n_terms < 0) throw std::invalid_argument("volume_series: negative truncation");
  const double u = std::log(eps);
  if (const long j = nearby_jump(desc, u, 1e-9)) throw JumpPointError(u, j);

  const TubeScales sc = scales_of(desc);
  const double amplitude = sc.res / sc.prime * std::pow(eps, 1.0 - sc.dim);
  double sum = 1.0 / (1.0 - sc.dim);  // n = 0 term
  const std::complex<double> step = std::exp(std::complex<double>(0.0, -sc.period * u));
  std::complex<double> rot(1.0, 0.0);
  for (long n = 1; n <= n_terms; ++n) {
    rot *= step;
    const double weight =
        smoothing == Smoothing::cesaro
            ? 1.0 - static_cast<double>(n) / static_cast<double>(n_terms + 1)
            : 1.0;
    const std::complex<double> denom(1.0 - sc.dim, -static_cast<double>(n) * sc.period);
    sum += 2.0 * weight * (rot / denom).real();
  }
  return amplitude * sum;
}

bool scaling_identity_check(const FractalStringDesc& desc, int random_samples,
                            unsigned long seed) {
  require_tube_family(desc);
  const auto [q, r, c] = desc.lattice();
  const Rational ratio(r, q);
  const Rational q_rat(q);
  const auto holds = [&](const Rational& eps) {
    return volume_direct(desc, eps / q_rat) == ratio * volume_direct(desc, eps);
  };

  // Seeded rationals in (l_first, 1).
  const Rational l1 = desc.term(desc.first_index()).length;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 999'999);
  for (int i = 0; i < random_samples; ++i) {
    const Rational t(num(rng), 1'000'000);  // in (0, 1)
    const Rational eps = l1 + t * (1 - l1);
    if (eps >= 1 || eps <= l1) continue;
    if (!holds(eps)) return false;
  }

  // Deterministic sweep across (0, 1): piece midpoints and the jumps l_j.
  for (long j = desc.first_index(); j < desc.first_index() + 10; ++j) {
    const Rational lj = desc.term(j).length;
    if (!holds(lj)) return false;
    if (!holds((lj + lj / q_rat) / 2)) return false;
    if (!holds(lj * Rational(7, 11))) return false;
  }
  return true;
}

double AverageContent::value() const {
  return to_double(coefficient) / std::log(to_double(log_arg));
}

AverageContent average_content_closed(const FractalStringDesc& desc) {
  require_tube_family(desc);
  const auto [q, r, c] = desc.lattice();
  AverageContent out;
  // res/(p(1-D)) with (1-D) log q = log(q/r) folded into the logarithm
  const Rational res_coeff =
      desc.family() == Family::euler_p ? Rational(c) : Rational(c, 1) / Rational(r);
  out.coefficient = res_coeff / Rational(desc.prime());
  out.log_arg = Rational(q) / Rational(r);
  out.dimension_zero = (r == 1);
  return out;
}

double average_content_numeric(const FractalStringDesc& desc, int start_scale,
                               int whole_periods) {
  require_tube_family(desc);
  if (whole_periods < 1)
    throw std::invalid_argument("average_content_numeric: need at least one period");
  if (start_scale < 0)
    throw std::invalid_argument("average_content_numeric: negative start scale");
  const TubeScales sc = scales_of(desc);
  const double q = std::exp(sc.log_q);
  const double dm1 = sc.dim - 1.0;

  double integral = 0;
  for (int j = start_scale; j < start_scale + whole_periods; ++j) {
    // V is constant on [q^-(j+1), q^-j); closed-form antiderivative per piece
    const double piece_v = to_double(desc.tail_length(j)) / sc.prime;
    const double hi = std::pow(q, -static_cast<double>(j) * dm1);
    const double lo = std::pow(q, -static_cast<double>(j + 1) * dm1);
    integral += piece_v * (hi - lo) / dm1;
  }
  return integral / (static_cast<double>(whole_periods) * sc.log_q);
}

ContentReport nonmeasurability_witness(const FractalStringDesc& desc) {
  require_tube_family(desc);
  const auto [q, r, c] = desc.lattice();
  const TubeScales sc = scales_of(desc);
  ContentReport rep;
  const AverageContent closed = average_content_closed(desc);
  rep.m_av_closed = closed.value();
  rep.m_av_numeric = average_content_numeric(desc, 1, 3);
  rep.dimension_zero = closed.dimension_zero;

  // On [l_{j+1}, l_j): g(eps) = W_{j+1} eps^(D-1), decreasing; the extremes
  // are j-independent. Evaluate on the first full piece.
  const long j = desc.first_index();
  const double w = to_double(desc.tail_length(j)) / sc.prime;
  rep.sup = w * std::pow(to_double(Rational(q)), static_cast<double>(j + 1) * (1.0 - sc.dim));
  rep.inf = w * std::pow(to_double(Rational(q)), static_cast<double>(j) * (1.0 - sc.dim));
  rep.ratio = Rational(q) / Rational(r);
  rep.verdict = rep.sup / rep.inf > 1.0 + 1e-9 ? "not measurable" : "measurable";
  return rep;
}

std::vector<TubeSample> wave_table(const FractalStringDesc& desc, const GridSpec& grid) {
  require_tube_family(desc);
  if (!(grid.lo > 0.0 && grid.lo <= grid.hi && grid.hi <= 1.0))
    throw std::invalid_argument("wave_table: need 0 < lo <= hi <= 1");
  if (grid.points < 1) throw std::invalid_argument("wave_table: need at least one point");
  const TubeScales sc = scales_of(desc);
  const double u_lo = std::log(grid.lo);
  const double u_hi = std::log(grid.hi);
  std::vector<TubeSample> out;
  out.reserve(static_cast<std::size_t>(grid.points));
  for (long i = 0; i < grid.points; ++i) {
    const double u = grid.points == 1
                         ? u_lo
                         : u_lo + (u_hi - u_lo) * static_cast<double>(i) /
                               static_cast<double>(grid.points - 1);
    TubeSample s;
    s.log_eps = u;
    s.eps = std::exp(u);
    s.volume = to_double(volume_direct(desc, Rational(s.eps)));
    s.ratio = s.volume * std::pow(s.eps, sc.dim - 1.0);
    s.jump = nearby_jump(desc, u, 1e-9) != 0;
    out.push_back(s);
  }
  return out;
}

}  // namespace padelic
