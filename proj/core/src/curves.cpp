#include "hamcurve/curves.hpp"

#include "hamcurve/resultant.hpp"

namespace hamcurve {

void ConicCurve::validate() const {
  if (a.is_zero() && b.is_zero() && c.is_zero()) throw PolyError("conic has no quadratic part");
}

MultiPoly ConicCurve::implicit() const {
  validate();
  const MultiPoly p1 = MultiPoly::variable("p1");
  const MultiPoly p2 = MultiPoly::variable("p2");
  return a * p1 * p1 + b * p2 * p2 + c * p1 * p2 + d * p1 + e * p2 + h;
}

HyperellipticFamily::HyperellipticFamily(std::vector<MultiPoly> lower) : u_(std::move(lower)) {
  if (u_.size() < 3 || u_.size() % 2 == 0) throw PolyError("hyperelliptic family needs odd degree >= 3");
  for (const auto& c : u_)
    if (c.depends_on("z") || c.depends_on("p"))
      throw PolyError("curve coefficient '" + c.to_string() + "' depends on z or p");
}

MultiPoly HyperellipticFamily::polynomial() const {
  const MultiPoly z = MultiPoly::variable("z");
  MultiPoly r(1);
  for (auto it = u_.rbegin(); it != u_.rend(); ++it) r = r * z + *it;
  return r;
}

MultiPoly HyperellipticFamily::implicit() const { return "p^2"_mp - polynomial(); }

MultiPoly HyperellipticFamily::discriminant() const {
  const MultiPoly raw = hamcurve::discriminant(polynomial(), "z");
  return degree() == 3 ? scale(raw, 16) : raw;
}

UniPoly HyperellipticFamily::at(const std::map<std::string, Rational>& params) const {
  std::vector<Rational> c;
  c.reserve(u_.size() + 1);
  for (const auto& u : u_) {
    for (const auto& v : u.variables())
      if (!params.count(v)) throw PolyError("unbound curve parameter '" + v + "'");
    c.push_back(u.is_constant() ? u.constant_term() : u.eval(params));
  }
  c.push_back(1);
  return UniPoly(std::move(c), "z");
}

Moduli weierstrass_moduli(const CubicCurve& c) {
  const Rational third(1, 3);
  return {c.u1 - scale(c.u3 * c.u3, third),
          c.u0 + scale(c.u3.pow(3), Rational(2, 27)) - scale(c.u3 * c.u1, third)};
}

MultiPoly cubic_discriminant(const CubicCurve& c) {
  const Moduli m = weierstrass_moduli(c);
  return scale(scale(m.g2.pow(3), 4) + scale(m.g3.pow(2), 27), -16);
}

MultiPoly quintic_discriminant(const QuinticCurve& q) { return q.family().discriminant(); }

const char* to_string(SingularKind k) {
  switch (k) {
    case SingularKind::node:
      return "node";
    case SingularKind::cusp:
      return "cusp";
    case SingularKind::acnode:
      return "acnode";
  }
  return "?";
}

SingularPoint classify_double_root(const UniPoly& p, const RootInterval& root) {
  const UniPoly g = gcd(p, p.derivative());
  // The root is multiple iff it is a root of gcd(P, P').
  bool multiple = false;
  if (g.degree() > 0) {
    if (root.is_exact()) {
      multiple = g.sign_at(root.lo) == 0;
    } else {
      const UniPoly gs = squarefree_part(g);
      multiple = gs.sign_at(root.hi) == 0 || SturmSequence(gs).count(root.lo, root.hi) > 0;
    }
  }
  if (!multiple) throw PolyError("classify_double_root: the isolated root is simple");

  int m = 0;
  for (const auto& [f, mult] : squarefree_decompose(p)) {
    const bool here = root.is_exact() ? f.sign_at(root.lo) == 0
                                      : (f.sign_at(root.hi) == 0 || SturmSequence(f).count(root.lo, root.hi) > 0);
    if (here) m = mult;
  }

  SingularPoint out;
  out.multiplicity = m;
  const UniPoly sqf = squarefree_part(p);
  out.z = root.is_exact() ? to_double(root.lo) : refine_root(sqf, root, 1e-15);
  if (m >= 3) {
    out.kind = SingularKind::cusp;
    return out;
  }
  // P = (z-r)^2 Q gives P''(r) = 2 Q(r).
  const int s = sign_at_root(p.derivative().derivative(), sqf, root);
  out.kind = s > 0 ? SingularKind::node : SingularKind::acnode;
  return out;
}

std::pair<UniPoly, UniPoly> parameterize_singular_cubic(const Rational& u) {
  return {UniPoly({-2 * u, 0, 1}, "q"), UniPoly({0, -3 * u, 0, 1}, "q")};
}

std::pair<MultiPoly, MultiPoly> parameterize_singular_cubic() { return {"q^2 - 2*u"_mp, "q^3 - 3*u*q"_mp}; }

MultiPoly singular_cubic() { return "p^2 - (z + 2*u)*(z - u)^2"_mp; }

int genus(const UniPoly& p) {
  if (p.is_zero()) throw PolyError("genus of the zero polynomial");
  if (p.degree() != 3 && p.degree() != 5) throw PolyError("genus needs a polynomial of degree 3 or 5");
  int odd = 0;
  for (const auto& [f, m] : squarefree_decompose(p))
    if (m % 2) odd += f.degree();
  return odd >= 1 ? (odd - 1) / 2 : 0;
}

}  // namespace hamcurve
