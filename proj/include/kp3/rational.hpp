#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kp3 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational arithmetic; weights and optimal values are never rounded.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p/q" with gcd(p,q)=1 and q>1, plain "p" otherwise.
std::string rational_to_string(const Rational& value);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or
/// a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace kp3
