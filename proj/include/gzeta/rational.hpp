#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gzeta {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number. Results of gmpxx arithmetic are always canonical;
/// values built from a numerator/denominator pair must go through
/// make_rational so that 2/4 is stored as 1/2.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Accepts "p", "-p", "p/q" (surrounding whitespace ignored). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

double to_double(const Rational& q);
double to_double(const Integer& n);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);
Integer power(const Integer& base, unsigned long exponent);
Rational power(const Rational& base, long exponent);

bool is_integer(const Rational& q);

}  // namespace gzeta
