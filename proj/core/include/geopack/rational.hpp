#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace geopack {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

// Accepts "p/q", integers and decimals with an optional exponent ("0.125", "-3e-2").
Rational parse_rational(std::string_view text);

// Exact: every finite double is a dyadic rational.
Rational from_double(double x);

// Nearest-ish double (GMP truncation semantics).
double to_double(const Rational& q);

// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Shortest decimal that round-trips the double, parsed exactly.
Rational from_decimal_double(double x);

Rational rational_pow(const Rational& base, unsigned exponent);

// floor and ceil of a rational as a signed 64-bit value (caller guarantees range).
long long floor_ll(const Rational& q);
long long ceil_ll(const Rational& q);

bool is_integer(const Rational& q);

}  // namespace geopack
