#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arbor {

/// Exact rational number. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" (b > 0). Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

/// Reduced rendering: "49", "-1/6".
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// C(n, k) exactly.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace arbor
