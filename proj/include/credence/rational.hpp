#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace credence {

// Exact arithmetic throughout the core; decimals appear only in rendering.
// cpp_rational keeps values in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "num/den" fractions, plain integers and decimal literals
// ("1/3", "-2", "0.25"). Throws ValidationError on anything else.
Rational parse_rational(const std::string& text);

// Canonical fraction rendering: "1/3", whole values without a denominator.
std::string to_fraction(const Rational& r);

// Display-only decimal approximation, fixed number of digits.
std::string to_decimal(const Rational& r, int digits = 6);

double to_double(const Rational& r);

} // namespace credence
