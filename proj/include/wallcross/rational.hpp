#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wallcross {

using Integer = mpz_class;

// Always canonical (lowest terms, positive denominator) as long as values are
// built through make_rational / parse_rational or arithmetic.
using Rational = mpq_class;

using IntVector = std::vector<long>;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational &q);

Integer factorial(unsigned n);

// Exact binomial for a nonnegative top index; 0 for k < 0 or k > n.
Integer binomial(long n, long k);

// Inner product of an integer vector with a rational vector.
Rational dot(const IntVector &a, const std::vector<Rational> &b);

long dot(const IntVector &a, const IntVector &b);

} // namespace wallcross
