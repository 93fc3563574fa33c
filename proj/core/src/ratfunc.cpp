#include "hamcurve/ratfunc.hpp"

namespace hamcurve {

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PolyError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = scale(num_, Rational(1) / den_.constant_term());
    den_ = MultiPoly(1);
    return;
  }
  if (num_ == den_) {
    num_ = MultiPoly(1);
    den_ = MultiPoly(1);
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw PolyError("division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RatFunc RatFunc::pow(unsigned e) const { return {num_.pow(e), den_.pow(e)}; }

double RatFunc::eval(const std::map<std::string, double>& values) const {
  return num_.eval(values) / den_.eval(values);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc differentiate(const RatFunc& f, std::string_view var) {
  const MultiPoly dn = differentiate(f.numerator(), var);
  if (f.is_polynomial()) return RatFunc(dn);
  const MultiPoly dd = differentiate(f.denominator(), var);
  if (dd.is_zero()) return {dn, f.denominator()};
  return {dn * f.denominator() - f.numerator() * dd, f.denominator().pow(2)};
}

RatFunc substitute(const MultiPoly& a, const std::map<std::string, RatFunc>& bindings) {
  bool all_polynomial = true;
  for (const auto& [name, value] : bindings) all_polynomial = all_polynomial && value.is_polynomial();
  if (all_polynomial) {
    std::map<std::string, MultiPoly> polys;
    for (const auto& [name, value] : bindings) polys.emplace(name, value.numerator());
    return RatFunc(substitute(a, polys));
  }

  // Bring every term over the common denominator prod(den_i^maxdeg_i) so the
  // result keeps a single, predictable denominator.
  const auto& vars = a.variables();
  std::vector<const RatFunc*> image(vars.size(), nullptr);
  std::vector<int> max_deg(vars.size(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (auto it = bindings.find(vars[i]); it != bindings.end()) {
      image[i] = &it->second;
      max_deg[i] = a.degree(vars[i]);
    }
  }

  MultiPoly common(1);
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (image[i]) common *= image[i]->denominator().pow(static_cast<unsigned>(max_deg[i]));

  MultiPoly numerator;
  for (const auto& [e, c] : a.terms()) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (image[i]) {
        term *= image[i]->numerator().pow(e[i]);
        term *= image[i]->denominator().pow(static_cast<unsigned>(max_deg[i]) - e[i]);
      } else if (e[i] != 0) {
        term *= MultiPoly::variable(vars[i]).pow(e[i]);
      }
    }
    numerator += term;
  }
  return {numerator, common};
}

}  // namespace hamcurve
