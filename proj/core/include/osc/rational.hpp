#pragma once

// Exact scalars. Every computation in the library runs over the rationals
// with arbitrary-precision numerators and denominators (GMP).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace osc {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" (q nonzero). Whitespace around the text is
// ignored. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical fraction form "p/q" with q >= 1, always including the
// denominator. Used for every machine-readable output.
std::string fraction_string(const Rational& value);

// Short form for humans: "p" for integers, "p/q" otherwise.
std::string display_string(const Rational& value);

std::string to_string(const BigInt& value);

BigInt factorial(unsigned n);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace osc
