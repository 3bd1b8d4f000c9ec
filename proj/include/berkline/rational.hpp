#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "berkline/errors.hpp"

namespace berkline {

// Exact rational scalar. GMP does the heavy lifting; everything in the
// library that must be exact is built on top of this.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational abs_of(const Rational& q) { return abs(q); }

// Largest integer <= q, as a Rational.
Rational floor_of(const Rational& q);
Rational ceil_of(const Rational& q);

// q^e for integer e (e < 0 requires q != 0).
Rational pow_rational(const Rational& q, long e);

// Exact square root if q is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

// Parses "p", "p/q" or a decimal like "-1.25" (converted exactly).
// Accepts an optional leading sign. Throws syntax_error on malformed input;
// `at` is added to reported offsets.
Rational parse_rational(std::string_view text, std::size_t at = 0);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

std::int64_t lcm_int64(std::int64_t a, std::int64_t b);

} // namespace berkline
