#ifndef QMZV_RATIONAL_HPP
#define QMZV_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmzv
{

// Exact rational. gmpxx keeps results of arithmetic in lowest terms with a
// positive denominator; the helpers below canonicalize everything built from
// raw numerator/denominator pairs.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer &num, const Integer &den);

// Accepts "n", "-n", "p/q" (q != 0) with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "n" when integral, otherwise "p/q".
std::string to_string(const Rational &value);

bool is_canonical(const Rational &value);

Integer binomial(long n, long k);
Integer factorial(unsigned long n);

// Binomial coefficient with a rational upper argument: x (x-1) ... (x-k+1) / k!.
Rational binomial(const Rational &x, unsigned long k);

} // namespace qmzv

#endif
