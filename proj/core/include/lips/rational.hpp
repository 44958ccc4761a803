#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lips {

/// Arbitrary precision rational number. GMP keeps every value canonical:
/// positive denominator, numerator and denominator coprime.
using Rational = mpq_class;

/// Parses an integer ("-3"), a decimal ("1.25", "-.5") or a fraction
/// ("7/3"). Decimals are converted exactly. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical short form: "3", "-1/2".
std::string to_string(const Rational& value);

/// Always "num/den", e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& value);

/// num/den in lowest terms. The two-argument mpq_class constructor does
/// not canonicalize, so every fraction built from integers goes through here.
inline Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace lips
