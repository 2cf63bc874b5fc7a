#pragma once

#include <gmpxx.h>

#include <string>

namespace flatband {

// Exact arbitrary-precision rational. All spectral data in this project is
// rational or lives in a number field over the rationals; no floating point
// enters any computation.
using Rat = mpq_class;

inline bool rat_is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool rat_is_integer(const Rat& a) { return a.get_den() == 1; }

// "3", "-1/2", "0"
std::string rat_to_string(const Rat& a);

// Always renders with an explicit denominator: "1/3", "4/1", "0/1".
std::string rat_to_fraction_string(const Rat& a);

// Accepts "p", "p/q"; throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

// Decimal expansion truncated toward zero to `digits` fractional digits,
// e.g. rat_to_decimal(-3/2, 12) == "-1.500000000000". Exact, no doubles.
std::string rat_to_decimal(const Rat& a, int digits);

}  // namespace flatband
