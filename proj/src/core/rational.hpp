#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ksseq {

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not canonicalize.
Rational ratio(long num, long den);

/// Parses "num/den" or "num" (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text, or "num" when the denominator is 1.
std::string to_string(const Rational& value);

} // namespace ksseq
