#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace gt {

// Every scalar in the library is an exact rational; nothing is ever rounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// True iff r has denominator 1 after reduction.
bool is_integer(const Rational& r);

/// True iff r is an integer and r >= 0.
bool is_nonneg_integer(const Rational& r);

/// Integer value of r; requires is_integer(r).
Integer integer_value(const Rational& r);

/// Parse "p", "-p" or "p/q" (q > 0) into an exact rational.
/// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when integral, otherwise "p/q" with q > 1.
std::string to_string(const Rational& r);

}  // namespace gt
