#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qschubert {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical fraction string: "3/2", "-1", "0". Never a decimal point.
std::string to_string(const Rational& value);

}  // namespace qschubert
