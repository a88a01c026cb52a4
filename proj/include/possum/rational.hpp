#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace possum {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or a zero
/// denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// gmp arithmetic on unreduced operands gives wrong comparisons.
Rational ratio(long num, unsigned long den);

Rational binomial(std::uint64_t n, std::uint64_t k);
Rational factorial(std::uint64_t n);

}  // namespace possum
