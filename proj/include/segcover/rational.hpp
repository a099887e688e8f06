#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace segcover {

// The only scalar type in the library. GMP keeps mpq values in lowest terms
// with a positive denominator, which is exactly the canonical form we need
// for exact equality and ordering.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num/den" or "int"; the numerator may carry a sign, the denominator
// must be a positive integer literal. Returns nullopt on anything else.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical textual form: "num/den", or just "num" when den == 1.
std::string to_string(const Rational& r);

// Smallest integer >= r.
Integer ceil_rational(const Rational& r);

// Largest integer <= r.
Integer floor_rational(const Rational& r);

// r^e for e >= 0 by repeated multiplication (exact).
Rational pow_rational(const Rational& r, unsigned long e);

}  // namespace segcover
