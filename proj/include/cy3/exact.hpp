#ifndef CY3_EXACT_HPP
#define CY3_EXACT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cy3 {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws ArgumentError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses an optionally signed decimal literal; throws LoadError on anything else.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Least non-negative residue of value modulo |modulus|.
Integer mod_floor(const Integer& value, const Integer& modulus);

bool divides(const Integer& divisor, const Integer& value);

/// Deterministic primality test (trial division below 2^20, GMP's BPSW-style test above).
bool is_prime(const Integer& value);

bool is_integral(const Rational& value);

}  // namespace cy3

#endif
