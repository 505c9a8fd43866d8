#include "padelic/adelic.hpp"

#include <cmath>
#include <stdexcept>

#include "padelic/primes.hpp"
#include "padelic/zeta.hpp"

namespace padelic {
namespace {

std::vector<std::pair<std::string, ZetaClosedForm>> factor_forms(
    const AdelicFamily& family, std::int64_t p_max) {
  std::vector<std::pair<std::string, ZetaClosedForm>> out;
  if (family.kind == AdelicFamily::Kind::cantor_smith) {
    const auto smith = FractalStringDesc::smith(family.smith_base);
    out.emplace_back(smith.name(), zeta_of(smith));
  }
  for (std::int64_t p : primes_up_to(p_max)) {
    const FractalStringDesc d =
        family.kind == AdelicFamily::Kind::l_half
            ? FractalStringDesc::rational_dim(p, 2, 1)
            : (p == 2 ? FractalStringDesc::cantor_2() : FractalStringDesc::cantor_p(p));
    out.emplace_back(d.name(), zeta_of(d));
  }
  return out;
}

}  // namespace

AdelicFamily AdelicFamily::cantor_smith(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("cantor_smith: base must be >= 2");
  AdelicFamily f;
  f.kind = Kind::cantor_smith;
  f.smith_base = m;
  return f;
}

std::string AdelicFamily::name() const {
  return kind == Kind::l_half ? "L_1/2"
                              : "CantorSmith(" + std::to_string(smith_base) + ")";
}

std::string trend_name(Trend t) {
  switch (t) {
    case Trend::to_zero: return "to-zero";
    case Trend::to_infinity: return "to-infinity";
    case Trend::stable: return "stable";
  }
  return "?";
}

AdelicAtOne adelic_eval_at_one(const AdelicFamily& family, std::int64_t p_max) {
  AdelicAtOne out;
  out.product = 1;
  for (const auto& [label, form] : factor_forms(family, p_max)) {
    Rational v = zeta_eval_exact(form, 1);
    out.product *= v;
    out.factors.emplace_back(label, std::move(v));
  }
  return out;
}

AdelicPartial adelic_partial_product(const AdelicFamily& family, double s,
                                     std::int64_t p_max) {
  const auto forms = factor_forms(family, p_max);
  if (forms.empty()) throw std::invalid_argument("adelic_partial_product: no factors");

  AdelicPartial out;
  std::vector<double> cumulative;
  cumulative.reserve(forms.size());
  double log_abs = 0;
  int sign = 1;
  for (const auto& [label, form] : forms) {
    const std::complex<double> v = zeta_eval(form, {s, 0.0});
    if (v.real() == 0) throw PoleError(ComplexDimension{});
    if (v.real() < 0) sign = -sign;
    log_abs += std::log(std::abs(v.real()));
    cumulative.push_back(log_abs);
  }
  out.log_abs = log_abs;
  out.sign = sign;
  out.value = sign * std::exp(log_abs);

  if (s == 1.0) {  // every factor is exactly 1 at s = 1
    Rational exact(1);
    for (const auto& [label, form] : forms) exact *= zeta_eval_exact(form, 1);
    out.exact = exact;
  }

  if (std::abs(log_abs) < 1e-6) {
    out.trend = Trend::stable;
  } else {
    const std::size_t half = cumulative.size() / 2;
    const double base = half == 0 ? 0.0 : cumulative[half - 1];
    const double slope =
        (cumulative.back() - base) / static_cast<double>(cumulative.size() - half);
    out.trend = slope <= 0 ? Trend::to_zero : Trend::to_infinity;
  }
  return out;
}

}  // namespace padelic
