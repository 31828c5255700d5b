#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lgvar {

/// Arbitrary precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q" (no whitespace inside). Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);

Integer floor(const Rational& x);

/// x - floor(x), in [0, 1).
Rational frac(const Rational& x);

/// Converts an integral rational to int64. Throws if not integral or out of range.
std::int64_t to_int64(const Rational& x);

std::int64_t to_int64(const Integer& x);

std::int64_t lcm_int64(std::int64_t a, std::int64_t b);

}  // namespace lgvar
