#include "hamcurve/resultant.hpp"

#include <utility>

namespace hamcurve {

namespace {

Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return divide_exact(a, b); }

template <class T>
T bareiss(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  for (const auto& row : m)
    if (row.size() != n) throw PolyError("determinant of a non-square matrix");

  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T(0)) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == T(0)) ++swap;
      if (swap == n) return T(0);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(v, prev);
      }
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return negate ? T(-d) : d;
}

// Leading-first coefficient list.
std::vector<MultiPoly> leading_first(const MultiPoly& p, std::string_view var) {
  auto c = p.coefficients_in(var);
  return {c.rbegin(), c.rend()};
}

}  // namespace

Rational determinant(std::vector<std::vector<Rational>> m) { return bareiss(std::move(m)); }
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) { return bareiss(std::move(m)); }

std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  const int m = a.degree(var);
  const int n = b.degree(var);
  if (m < 0 || n < 0) throw PolyError("Sylvester matrix of a zero polynomial");
  const auto ca = leading_first(a, var);
  const auto cb = leading_first(b, var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = ca[static_cast<std::size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = cb[static_cast<std::size_t>(k)];
  return s;
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  if (a.is_zero() && b.is_zero()) throw PolyError("resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) {
    // Zero shares every root of the other input; Res(0, c) = 1 for a constant c.
    const MultiPoly& other = a.is_zero() ? b : a;
    return other.degree(var) == 0 ? MultiPoly(1) : MultiPoly();
  }
  return determinant(sylvester_matrix(a, b, var));
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw PolyError("resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) {
    const UniPoly& other = a.is_zero() ? b : a;
    return other.degree() == 0 ? Rational(1) : Rational(0);
  }
  const int m = a.degree();
  const int n = b.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = b.coeff(n - k);
  return determinant(std::move(s));
}

MultiPoly discriminant(const MultiPoly& p, std::string_view var) {
  const int n = p.degree(var);
  if (n < 2) throw PolyError("discriminant needs degree >= 2 in " + std::string(var));
  const MultiPoly lead = p.coefficients_in(var).back();
  MultiPoly r = divide_exact(resultant(p, differentiate(p, var), var), lead);
  return (n * (n - 1) / 2) % 2 ? -r : r;
}

Rational discriminant_uni(const UniPoly& p) {
  const int n = p.degree();
  if (n < 2) throw PolyError("discriminant needs degree >= 2");
  Rational r = resultant(p, p.derivative()) / p.leading();
  return (n * (n - 1) / 2) % 2 ? Rational(-r) : r;
}

}  // namespace hamcurve
