#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hmsector {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses an integer, a fraction "p/q", or a finite decimal such as "-1.001"
/// or "2.5e-3" into an exact rational. Decimals are converted digit by digit,
/// never through binary floating point.
Rational parse_rational(std::string_view token);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

std::vector<std::string> to_strings(const std::vector<Rational>& values);

inline int sign(const Rational& value) { return sgn(value); }

inline double to_double(const Rational& value) { return value.get_d(); }

} // namespace hmsector
