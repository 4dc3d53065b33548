#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace energygraph {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arithmetic never leaves the rationals.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(const std::string& s);

}  // namespace energygraph
