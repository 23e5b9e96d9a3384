#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace supermonad {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", "-p/q". Throws ValidationError otherwise or on q = 0.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& q);

/// Throws InvariantBreach if q is not an integer.
Integer to_integer(const Rational& q, const char* what);

/// Throws ValidationError if z does not fit.
std::int64_t to_int64(const Integer& z, const char* what);

Integer binomial(const Integer& top, unsigned long k);

/// Binomial coefficient extended to negative tops as the polynomial
/// top(top-1)...(top-k+1)/k!.
Integer binomial_poly(std::int64_t top, unsigned long k);

Integer factorial(unsigned long k);

} // namespace supermonad
