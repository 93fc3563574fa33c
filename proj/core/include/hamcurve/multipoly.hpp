#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hamcurve/rational.hpp"

namespace hamcurve {

/// Exponent vector, one entry per variable of the owning polynomial.
using Exponents = std::vector<std::uint32_t>;

/// Total order on variable names used by every canonical form:
/// p1, p2, p, z, q, x1, x2, x, y, t, then any other name alphabetically.
bool variable_less(std::string_view a, std::string_view b);

/// True for names accepted by the polynomial grammar: [A-Za-z][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

/// Exact multivariate polynomial with rational coefficients.
///
/// The variable list is kept sorted by `variable_less` and pruned to the
/// variables that actually occur, so two polynomials are equal exactly when
/// their term maps are equal. Values are immutable in spirit: every operation
/// returns a new canonical polynomial.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)

  static MultiPoly variable(std::string_view name);

  /// Parses the text grammar: + - * / ^ and parentheses over integer,
  /// decimal or ratio literals and identifiers. Division is only by nonzero
  /// constants; exponents are nonnegative integer literals.
  static MultiPoly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  std::size_t term_count() const { return terms_.size(); }

  bool depends_on(std::string_view var) const;
  /// Degree in one variable; -1 for the zero polynomial.
  int degree(std::string_view var) const;
  int total_degree() const;

  /// Coefficients of var^0, var^1, ..., var^deg as polynomials in the
  /// remaining variables.
  std::vector<MultiPoly> coefficients_in(std::string_view var) const;

  /// Leading term in the lexicographic order induced by the variable order.
  std::pair<Exponents, Rational> leading_term() const;

  MultiPoly pow(unsigned e) const;

  /// Full evaluation; every variable must be bound.
  Rational eval(const std::map<std::string, Rational>& values) const;
  double eval(const std::map<std::string, double>& values) const;

  /// Canonical text in the same grammar accepted by `parse`.
  std::string to_string() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  MultiPoly(std::vector<std::string> vars, TermMap terms);
  void normalize();
  /// Re-expresses this polynomial's exponent vectors over `vars`, a sorted
  /// superset of `vars_`.
  TermMap remap(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  TermMap terms_;

  friend MultiPoly substitute(const MultiPoly&, const std::map<std::string, MultiPoly>&);
  friend MultiPoly differentiate(const MultiPoly&, std::string_view);
  friend MultiPoly divide_exact(const MultiPoly&, const MultiPoly&);
  friend MultiPoly monomial(const Rational&, const std::map<std::string, unsigned>&);
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const Rational& c);

/// c * prod var^e.
MultiPoly monomial(const Rational& c, const std::map<std::string, unsigned>& powers);

/// Formal partial derivative. Differentiating by a variable that does not
/// occur gives 0; a name that is not an identifier is an error.
MultiPoly differentiate(const MultiPoly& a, std::string_view var);

/// Simultaneous substitution of every bound variable.
MultiPoly substitute(const MultiPoly& a, const std::map<std::string, MultiPoly>& bindings);

/// Exact quotient a / b; throws PolyError when b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

inline MultiPoly operator""_mp(const char* text, std::size_t n) {
  return MultiPoly::parse(std::string_view(text, n));
}

}  // namespace hamcurve
