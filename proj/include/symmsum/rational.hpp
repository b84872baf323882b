#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symmsum {

/// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p" or "p/q". Throws input_error on junk or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);

} // namespace symmsum
