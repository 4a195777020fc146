#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace psa {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "[-]digits" or "[-]digits/digits" with a nonzero denominator.
/// Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

/// Exact power with a signed exponent; throws DomainError for 0 to a negative power.
Rational power(const Rational& base, std::int64_t exponent);

std::int64_t to_int64(const Integer& z);

} // namespace psa
