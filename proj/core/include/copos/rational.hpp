#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace copos {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal ("-0.125", "3e-2")
/// into an exact rational. Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Exact value of a binary double.
Rational rational_from_double(double v);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace copos
