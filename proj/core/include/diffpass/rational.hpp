#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace diffpass {

/// Exact coefficient field. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Parses "p" or "p/q" with optional leading '-'; no decimals, no whitespace.
/// Throws StructuralError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

} // namespace diffpass
