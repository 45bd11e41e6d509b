#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symderiv {

/// Exact rational scalar. Arithmetic results are canonical (positive
/// denominator, coprime parts); the two-argument constructor is not, so
/// vectors canonicalize coefficients on entry.
using Scalar = mpq_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Lowest-terms "p/q"; the denominator is always written, even when it is 1.
std::string to_fraction_string(const Scalar& s);

/// Inverse of to_fraction_string. Also accepts a bare integer.
Scalar parse_fraction(std::string_view text);

} // namespace symderiv
