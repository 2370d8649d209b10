#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace summa {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational numbers.  cpp_rational keeps gcd = 1 and a positive
// denominator, which is exactly the normalization we require.
using Rational = boost::multiprecision::cpp_rational;

// "8" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rational& r);

// Accepts "p", "-p", "p/q", "p/2^l", and plain decimals like "0.25" or
// "-1.5e-3" (converted exactly).  Returns nullopt on malformed input.
std::optional<Rational> rat_parse(std::string_view s);

double rat_dbl(const Rational& r);

Rational rat_abs(const Rational& r);

// base^e for integer e; base must be nonzero when e < 0.
Rational rat_pow(const Rational& base, long e);

// floor(x^(1/n)) for x >= 0, n >= 1.
BigInt iroot(const BigInt& x, unsigned n);

// lo <= x^(1/n) <= hi with hi - lo <= 2^-bits; requires x >= 0, n >= 1.
std::pair<Rational, Rational> root_bounds(const Rational& x, unsigned n,
                                          unsigned bits);

// Encloses x^e for x >= 0 and rational e >= 0.
std::pair<Rational, Rational> pow_bounds(const Rational& x, const Rational& e,
                                         unsigned bits);

}  // namespace summa
