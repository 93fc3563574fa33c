#pragma once

#include <map>
#include <string>

#include "hamcurve/multipoly.hpp"

namespace hamcurve {

/// Quotient of two MultiPoly values. Used for solution ansaetze that are not
/// polynomial (e.g. u = (y0 - y)/(3x)); a residual is certified zero by
/// checking that its numerator is the zero polynomial.
///
/// No gcd cancellation is attempted beyond folding constant denominators,
/// so numerators are exact but not necessarily minimal.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(MultiPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(MultiPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MultiPoly num, MultiPoly den);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  double eval(const std::map<std::string, double>& values) const;
  std::string to_string() const;

  RatFunc operator-() const { return {-num_, den_}; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  RatFunc pow(unsigned e) const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_ = MultiPoly(1);
};

RatFunc differentiate(const RatFunc& f, std::string_view var);

/// Substitutes rational functions for variables of a polynomial.
RatFunc substitute(const MultiPoly& a, const std::map<std::string, RatFunc>& bindings);

}  // namespace hamcurve
