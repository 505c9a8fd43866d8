#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "padelic/fractal_string.hpp"
#include "padelic/rational.hpp"

namespace padelic {

// One meromorphic kernel C / (q^s - r); with `shifted` set the numerator
// carries q^s, giving the Euler form C / (1 - r q^-s).
struct ZetaFactor {
  Rational constant;  // C != 0
  Rational base;      // q > 1
  Rational weight;    // r > 0
  bool shifted = false;
};

// A point D + i n p on the pole lattice of a factor.
struct ComplexDimension {
  long n = 0;
  double dim = 0;
  double period = 0;
  std::complex<double> value;
};

struct PoleError : std::domain_error {
  explicit PoleError(ComplexDimension cd)
      : std::domain_error("evaluation too close to the pole at n = " +
                          std::to_string(cd.n)),
        nearest(cd) {}
  ComplexDimension nearest;
};

// Geometric zeta function in closed form: a finite product of factors,
// the zero function (degenerate empty string), or the symbolic harmonic
// tag whose zeta is evaluated by truncation only.
struct ZetaClosedForm {
  std::vector<ZetaFactor> factors;
  bool zero = false;
  bool harmonic = false;
  std::optional<Rational> dim_exact;  // D as a rational when known by construction

  /// The lattice kernel; throws std::logic_error unless exactly one factor.
  const ZetaFactor& single() const;
};

ZetaClosedForm zeta_of(const FractalStringDesc& desc);

/// Meromorphic evaluation with pole guard |q^s - r| > 1e-9 (1 + |r|);
/// exact rational fast path at small integer s. Throws PoleError with the
/// nearest lattice point.
std::complex<double> zeta_eval(const ZetaClosedForm& z, std::complex<double> s);

/// Exact value at integer s; PoleError exactly when q^s == r.
Rational zeta_eval_exact(const ZetaClosedForm& z, long s);

struct Dimension {
  std::optional<Rational> exact;
  double value = 0;   // log r / log q
  double period = 0;  // 2 pi / log q
};
Dimension dimension(const ZetaClosedForm& z);

/// Lattice points with imaginary part in [t_min, t_max], ascending in n.
std::vector<ComplexDimension> complex_dimensions(const ZetaClosedForm& z,
                                                 double t_min, double t_max);

// Exact residue coefficient / log(log_base); the same at every lattice point.
struct Residue {
  Rational coefficient;
  Rational log_base;
  double value() const;
};
Residue residue_at(const ZetaClosedForm& z);

/// Limit oracle: (s - omega) zeta(s) averaged over s = omega +- h, omega +- ih.
std::complex<double> residue_numeric(const ZetaClosedForm& z,
                                     std::complex<double> omega, double h);

struct DirichletPartial {
  std::complex<double> value;
  std::optional<double> tail_bound;  // absent when Re(s) <= D (diverging partial)
  bool convergent = true;
};

/// Truncated Dirichlet series sum mu_n l_n^s with a rigorous geometric (or,
/// for the harmonic string, integral) tail bound.
DirichletPartial dirichlet_partial(const FractalStringDesc& desc,
                                   std::complex<double> s, long n_terms);

// partial + tail == zeta_eval_exact exactly for lattice families at integer
// s above the dimension. Tail absent when the series diverges (or harmonic).
struct ExactPartial {
  Rational partial;
  std::optional<Rational> tail;
};
ExactPartial dirichlet_partial_exact(const FractalStringDesc& desc, long s,
                                     long n_terms);

}  // namespace padelic
