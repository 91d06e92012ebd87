#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tourn {

// Exact rationals for densities, weights and thresholds. Comparisons against
// a threshold must be reproducible, so no floating point is involved.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q", or "p" for integers.
std::string to_string(const Rational& r);

// Fraction followed by a decimal annotation, e.g. "1/3 (~0.333333)".
std::string annotated(const Rational& r);

// Parses "p/q", "p" or a finite decimal such as "0.25". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

} // namespace tourn
