#pragma once

#include <gmpxx.h>

#include <string>

namespace linkinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form (gcd 1, positive denominator).
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// True when 2q is an integer.
bool is_half_integer(const Rational& q);

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// Residue of a modulo m in [0, |m|); m == 0 returns a unchanged.
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace linkinv
