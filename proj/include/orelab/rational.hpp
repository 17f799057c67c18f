#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orelab {

/// Arbitrary-precision rational, always normalized (gcd 1, positive denominator).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace orelab
