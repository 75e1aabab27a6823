#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace roughcat {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer, or a finite decimal ("0.35") into an exact
/// rational. Throws Error(parse_error) on anything else.
Rational parse_rational(std::string_view text);

/// True if `text` parses as a rational.
bool looks_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string format_rational(const Rational& value);

/// Decimal rendering with up to `digits` fractional digits, trailing
/// zeros trimmed. Display only.
std::string format_decimal(const Rational& value, int digits = 6);

double to_double(const Rational& value);

}  // namespace roughcat
