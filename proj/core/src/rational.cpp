#include "padelic/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace padelic {

Int int_pow(const Int& base, unsigned long exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw std::domain_error("rational_pow: 0 raised to a negative power");
    return Rational(0);
  }
  const unsigned long e = exp < 0 ? static_cast<unsigned long>(-(exp + 1)) + 1ul
                                  : static_cast<unsigned long>(exp);
  Rational out(int_pow(numerator(base), e), int_pow(denominator(base), e));
  if (exp < 0) out = Rational(denominator(out), numerator(out));
  return out;
}

std::string format_rational(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
    const std::string num(text.substr(0, slash));
    const std::string den(text.substr(slash + 1));
    if (num.empty() || den.empty()) throw bad();
    Int d{den};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(Int(num), d);
  } catch (const std::runtime_error&) {
    throw bad();  // cpp_int rejects malformed strings with runtime_error
  }
}

}  // namespace padelic
