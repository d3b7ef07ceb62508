#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace rankfn {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q" (q > 0, gcd(p, q) = 1) or a bare integer "p".
/// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" encoding; integers are written with denominator 1.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

inline Rational half(const Rational& value) { return value / 2; }

}  // namespace rankfn
