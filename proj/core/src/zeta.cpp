#include "padelic/zeta.hpp"

#include <cmath>

namespace padelic {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double pole_guard(const ZetaFactor& f) {
  return 1e-9 * (1.0 + std::abs(to_double(f.weight)));
}

ComplexDimension lattice_point(const ZetaFactor& f, long n) {
  ComplexDimension cd;
  cd.n = n;
  const double lq = std::log(to_double(f.base));
  cd.dim = std::log(to_double(f.weight)) / lq;
  cd.period = kTwoPi / lq;
  cd.value = {cd.dim, static_cast<double>(n) * cd.period};
  return cd;
}

ComplexDimension nearest_pole(const ZetaFactor& f, std::complex<double> s) {
  const double period = kTwoPi / std::log(to_double(f.base));
  return lattice_point(f, std::lround(s.imag() / period));
}

bool small_integer(std::complex<double> s, long& out) {
  if (s.imag() != 0.0) return false;
  const double r = s.real();
  if (r != std::nearbyint(r) || std::abs(r) > 64) return false;
  out = static_cast<long>(r);
  return true;
}

void require_lattice(const ZetaClosedForm& z, const char* op) {
  if (z.zero) throw std::domain_error(std::string(op) + ": zero zeta function (empty string)");
  if (z.harmonic)
    throw std::domain_error(std::string(op) + ": harmonic zeta is evaluated by truncation only");
}

}  // namespace

const ZetaFactor& ZetaClosedForm::single() const {
  if (zero || harmonic || factors.size() != 1)
    throw std::logic_error("ZetaClosedForm::single: not a one-factor lattice form");
  return factors.front();
}

ZetaClosedForm zeta_of(const FractalStringDesc& desc) {
  ZetaClosedForm z;
  if (desc.family() == Family::harmonic) {
    z.harmonic = true;
    return z;
  }
  if (desc.degenerate() && desc.family() == Family::rational_dim) {
    z.zero = true;
    z.dim_exact = Rational(1);  // k = m; see the open question on this case
    return z;
  }
  const auto [q, r, c] = desc.lattice();
  ZetaFactor f;
  f.constant = c;
  f.base = q;
  f.weight = r;
  f.shifted = desc.family() == Family::euler_p;
  z.factors.push_back(std::move(f));
  if (desc.family() == Family::rational_dim)
    z.dim_exact = Rational(desc.kept_exponent(), desc.block_size());
  else if (r == 1)
    z.dim_exact = Rational(0);
  return z;
}

std::complex<double> zeta_eval(const ZetaClosedForm& z, std::complex<double> s) {
  require_lattice(z, "zeta_eval");
  long si = 0;
  if (small_integer(s, si)) {
    const Rational exact = zeta_eval_exact(z, si);
    return {to_double(exact), 0.0};
  }
  std::complex<double> product(1.0, 0.0);
  for (const ZetaFactor& f : z.factors) {
    const std::complex<double> qs = std::exp(s * std::log(to_double(f.base)));
    const std::complex<double> den = qs - to_double(f.weight);
    if (std::abs(den) <= pole_guard(f)) throw PoleError(nearest_pole(f, s));
    std::complex<double> num(to_double(f.constant), 0.0);
    if (f.shifted) num *= qs;
    product *= num / den;
  }
  return product;
}

Rational zeta_eval_exact(const ZetaClosedForm& z, long s) {
  require_lattice(z, "zeta_eval_exact");
  Rational product(1);
  for (const ZetaFactor& f : z.factors) {
    const Rational qs = rational_pow(f.base, s);
    if (qs == f.weight) throw PoleError(lattice_point(f, 0));
    Rational num = f.constant;
    if (f.shifted) num *= qs;
    product *= num / (qs - f.weight);
  }
  return product;
}

Dimension dimension(const ZetaClosedForm& z) {
  require_lattice(z, "dimension");
  const ZetaFactor& f = z.single();
  Dimension d;
  d.exact = z.dim_exact;
  const double lq = std::log(to_double(f.base));
  d.value = z.dim_exact ? to_double(*z.dim_exact) : std::log(to_double(f.weight)) / lq;
  d.period = kTwoPi / lq;
  return d;
}

std::vector<ComplexDimension> complex_dimensions(const ZetaClosedForm& z,
                                                 double t_min, double t_max) {
  require_lattice(z, "complex_dimensions");
  const ZetaFactor& f = z.single();
  const double period = kTwoPi / std::log(to_double(f.base));
  std::vector<ComplexDimension> out;
  const long n_lo = static_cast<long>(std::ceil(t_min / period));
  const long n_hi = static_cast<long>(std::floor(t_max / period));
  for (long n = n_lo; n <= n_hi; ++n) out.push_back(lattice_point(f, n));
  return out;
}

double Residue::value() const {
  return to_double(coefficient) / std::log(to_double(log_base));
}

Residue residue_at(const ZetaClosedForm& z) {
  require_lattice(z, "residue_at");
  const ZetaFactor& f = z.single();
  // numerator(omega) / (q^omega log q) with q^omega = r
  return {f.shifted ? f.constant : f.constant / f.weight, f.base};
}

std::complex<double> residue_numeric(const ZetaClosedForm& z,
                                     std::complex<double> omega, double h) {
  require_lattice(z, "residue_numeric");
  if (h <= 0) throw std::invalid_argument("residue_numeric: h must be positive");
  const std::complex<double> offsets[4] = {{h, 0}, {-h, 0}, {0, h}, {0, -h}};
  std::complex<double> sum(0, 0);
  for (const auto& d : offsets) sum += d * zeta_eval(z, omega + d);
  return sum / 4.0;
}

DirichletPartial dirichlet_partial(const FractalStringDesc& desc,
                                   std::complex<double> s, long n_terms) {
  if (n_terms < 1) throw std::invalid_argument("dirichlet_partial: need n_terms >= 1");
  DirichletPartial out;
  out.value = 0;
  const double sigma = s.real();

  if (desc.family() == Family::harmonic) {
    for (long n = 1; n <= n_terms; ++n)
      out.value += std::exp(-s * std::log(static_cast<double>(n)));
    out.convergent = sigma > 1.0;
    if (out.convergent)
      out.tail_bound = std::pow(static_cast<double>(n_terms), 1.0 - sigma) / (sigma - 1.0);
    return out;
  }

  const auto [q, r, c] = desc.lattice();
  if (c == 0) {  // degenerate empty string
    out.tail_bound = 0.0;
    return out;
  }
  const double lq = std::log(to_double(q));
  const double lr = std::log(to_double(r));
  const double lc = std::log(to_double(c));
  const long n0 = desc.first_index();
  for (long i = 0; i < n_terms; ++i) {
    const long n = n0 + i;
    // mu_n l_n^s = exp(log c + (n - n0) log r - n s log q)
    const double log_mu = lc + static_cast<double>(n - n0) * lr;
    out.value += std::exp(std::complex<double>(log_mu, 0) -
                          s * (static_cast<double>(n) * lq));
  }
  const double x = to_double(r) * std::pow(to_double(q), -sigma);
  out.convergent = x < 1.0;
  if (out.convergent) {
    const long next = n0 + n_terms;
    const double log_head =
        lc + static_cast<double>(next - n0) * lr - sigma * static_cast<double>(next) * lq;
    out.tail_bound = std::exp(log_head) / (1.0 - x);
  }
  return out;
}

ExactPartial dirichlet_partial_exact(const FractalStringDesc& desc, long s,
                                     long n_terms) {
  if (n_terms < 1)
    throw std::invalid_argument("dirichlet_partial_exact: need n_terms >= 1");
  ExactPartial out;
  out.partial = 0;

  if (desc.family() == Family::harmonic) {
    for (long n = 1; n <= n_terms; ++n)
      out.partial += rational_pow(Rational(1, n), s);
    return out;  // no rational closed form for the harmonic tail
  }

  const auto [q, r, c] = desc.lattice();
  if (c == 0) {
    out.tail = Rational(0);
    return out;
  }
  const long n0 = desc.first_index();
  const Rational ratio = Rational(r) * rational_pow(Rational(q), -s);
  Rational term = Rational(c) * rational_pow(Rational(q), -s * n0);
  for (long i = 0; i < n_terms; ++i) {
    out.partial += term;
    term *= ratio;
  }
  if (ratio < 1) out.tail = term / (1 - ratio);  // exact geometric remainder
  return out;
}

}  // namespace padelic
