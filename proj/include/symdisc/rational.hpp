/*
 * rational.hpp
 * ------------
 * Exact rational scalars.  We use GMP's C++ wrapper (mpq_class) directly:
 * it is canonicalizing, exact, and fast enough for the very large
 * numerators that show up when many-variable discriminants are evaluated.
 * Helpers here cover parsing, printing, and the handful of integer
 * combinatorics the rest of the library needs.
 */
#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

#include "symdisc/errors.hpp"

namespace symdisc {

using Rational = mpq_class;
using Integer = mpz_class;

// Parse "p", "-p" or "p/q" (q > 0 after canonicalization).  Anything else,
// including decimal notation, is rejected: inputs must stay exact.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" or "p/q" with q > 1.
std::string to_string(const Rational& q);

// q^e for e >= 0 (q^0 == 1, including q == 0).
Rational rational_pow(const Rational& q, unsigned long e);

// q^e for arbitrary integer e; throws DomainError on 0^negative.
Rational rational_pow_signed(const Rational& q, long e);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Convert an exact rational that is known to be a non-negative integer
// into unsigned long; throws NonIntegralExponent otherwise.
unsigned long to_ulong_exact(const Rational& q);

} // namespace symdisc
