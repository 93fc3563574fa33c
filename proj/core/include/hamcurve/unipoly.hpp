#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamcurve/multipoly.hpp"

namespace hamcurve {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The coefficient list carries no trailing zeros, so the leading
/// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "z");

  /// Throws PolyError unless `p` involves no variable other than `var`.
  static UniPoly from_multipoly(const MultiPoly& p, std::string var);

  /// Exact conversion of double coefficients (lowest degree first).
  static UniPoly from_doubles(const std::vector<double>& coeffs, std::string var = "z");

  MultiPoly to_multipoly() const;

  const std::string& variable() const { return var_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  /// Sign of the value at x, exact.
  int sign_at(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const { return to_multipoly().to_string(); }

 private:
  void trim();

  std::vector<Rational> c_;
  std::string var_ = "z";
};

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Exact quotient; throws PolyError when the remainder is nonzero.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

/// P / gcd(P, P').
UniPoly squarefree_part(const UniPoly& p);

}  // namespace hamcurve
