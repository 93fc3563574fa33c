#include "hamcurve/unipoly.hpp"

#include <algorithm>

namespace hamcurve {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, std::string var) {
  for (const auto& v : p.variables())
    if (v != var) throw PolyError("polynomial '" + p.to_string() + "' is not univariate in " + var);
  auto parts = p.coefficients_in(var);
  std::vector<Rational> c;
  c.reserve(parts.size());
  for (const auto& part : parts) c.push_back(part.constant_term());
  return UniPoly(std::move(c), std::move(var));
}

UniPoly UniPoly::from_doubles(const std::vector<double>& coeffs, std::string var) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (double v : coeffs) c.push_back(from_double(v));
  return UniPoly(std::move(c), std::move(var));
}

MultiPoly UniPoly::to_multipoly() const {
  MultiPoly r;
  if (c_.empty()) return r;
  const MultiPoly x = MultiPoly::variable(var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + MultiPoly(*it);
  return r;
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw PolyError("leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

double UniPoly::eval(double x) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

int UniPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly({}, var_);
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> m = c_;
  const Rational lead = c_.back();
  for (auto& v : m) v /= lead;
  return UniPoly(std::move(m), var_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UniPoly(std::move(c), a.var_);
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c), a.var_);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PolyError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly({}, a.variable()), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  const Rational& lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  return {UniPoly(std::move(quot), a.variable()), UniPoly(std::move(rem), a.variable())};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PolyError("inexact univariate division");
  return q;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  return divide_exact(p, gcd(p, p.derivative()));
}

}  // namespace hamcurve
