#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace iitk {

using Rational = mpq_class;

// Parses "p/q", integers, and decimal literals with optional exponent
// ("3/16", "-2", "0.25", "1e-9"). Decimal input converts to the exact
// rational it denotes. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// Reduced fraction, "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace iitk
