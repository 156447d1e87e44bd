#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ogf {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form (gcd-reduced,
/// positive denominator) after every operation.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "+p", "-p" or "p/q". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Exact base^exp. exp may be negative (base must be nonzero then);
/// base^0 is 1, including 0^0.
Rational rational_pow(const Rational& base, long exp);

Integer factorial(int n);

}  // namespace ogf
