#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamcurve {

/// Exact rational number. gcd(|num|, den) = 1 and den > 0 after every
/// arithmetic operation (GMP keeps mpq_class canonical).
using Rational = mpq_class;

/// Thrown for malformed polynomial text, bad variable names, and inexact
/// operations on polynomials.
class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);

/// Parses "7", "-3/2", "0.25", "1e-3" exactly. Decimal and exponent forms are
/// converted to the exact rational they denote, not to the nearest double.
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite double.
Rational from_double(double v);

double to_double(const Rational& r);

std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_value(const Rational& r) { return abs(r); }

}  // namespace hamcurve
