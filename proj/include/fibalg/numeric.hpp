#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fibalg {

// Arbitrary-precision carriers. GMP keeps both canonical: zero has no sign
// and rationals are always in lowest terms with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& x);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Parses an optionally signed decimal integer. Throws InvalidInput.
Integer parse_integer(std::string_view text);

/// Parses "p", "p/q" (any sign placement GMP accepts) and canonicalizes.
/// Throws InvalidInput on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

inline Integer from_int(std::int64_t v) {
    return Integer(static_cast<long>(v));
}

/// (-1)^k for any signed k.
inline int neg_one_pow(std::int64_t k) {
    return (k % 2 == 0) ? 1 : -1;
}

} // namespace fibalg
