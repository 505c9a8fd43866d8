#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace padelic {

// Exact arbitrary-precision scalars. Every length, measure and multiplicity
// in the library is one of these; doubles appear only at the output edge.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const Int& x) { return x.convert_to<double>(); }

Int int_pow(const Int& base, unsigned long exp);

/// base^exp for any integer exp; throws std::domain_error for 0^negative.
Rational rational_pow(const Rational& base, long exp);

/// Always "num/den", even for integers ("3" prints as "3/1").
std::string format_rational(const Rational& x);

/// Accepts "num", "num/den", optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace padelic
