#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamcurve/multipoly.hpp"
#include "hamcurve/roots.hpp"
#include "hamcurve/unipoly.hpp"

namespace hamcurve {

/// a*p1^2 + b*p2^2 + c*p1*p2 + d*p1 + e*p2 + h with coefficients in the
/// deformation parameters.
struct ConicCurve {
  MultiPoly a, b, c, d, e, h;

  /// Throws PolyError when a, b and c are all zero.
  void validate() const;
  MultiPoly implicit() const;
};

/// p^2 - P(z) with P = z^n + u_{n-1} z^{n-1} + ... + u_0, n odd.
/// Coefficients are polynomials in the deformation parameters (x, t, ...).
class HyperellipticFamily {
 public:
  /// `lower` holds u_0 .. u_{n-1}; n = lower.size() must be odd and >= 3.
  explicit HyperellipticFamily(std::vector<MultiPoly> lower);

  int degree() const { return static_cast<int>(u_.size()); }
  const MultiPoly& coefficient(int i) const { return u_.at(static_cast<std::size_t>(i)); }
  const std::vector<MultiPoly>& coefficients() const { return u_; }

  /// P(z) as a polynomial in z and the parameters.
  MultiPoly polynomial() const;
  /// p^2 - P(z).
  MultiPoly implicit() const;
  /// Cubics: the -16(4 g2^3 + 27 g3^2) convention (16 times the raw
  /// discriminant). Other degrees: the raw discriminant in z.
  MultiPoly discriminant() const;

  /// P(z) at fixed parameter values. Every parameter must be bound.
  UniPoly at(const std::map<std::string, Rational>& params) const;
  UniPoly at_xt(const Rational& x, const Rational& t) const { return at({{"x", x}, {"t", t}}); }

 private:
  std::vector<MultiPoly> u_;
};

struct CubicCurve {
  MultiPoly u3, u1, u0;

  HyperellipticFamily family() const { return HyperellipticFamily({u0, u1, u3}); }
};

struct QuinticCurve {
  MultiPoly u0, u1, u2, u3, u4;

  HyperellipticFamily family() const { return HyperellipticFamily({u0, u1, u2, u3, u4}); }
};

struct Moduli {
  MultiPoly g2, g3;
};

/// g2 = u1 - u3^2/3, g3 = u0 + 2 u3^3/27 - u3 u1/3.
Moduli weierstrass_moduli(const CubicCurve& c);

/// -16(4 g2^3 + 27 g3^2), expanded.
MultiPoly cubic_discriminant(const CubicCurve& c);

/// Raw discriminant of z^5 + u4 z^4 + ... + u0.
MultiPoly quintic_discriminant(const QuinticCurve& q);

enum class SingularKind { node, cusp, acnode };

const char* to_string(SingularKind k);

struct SingularPoint {
  double z = 0.0;
  SingularKind kind = SingularKind::node;
  int multiplicity = 2;
};

/// Real singular point of p^2 = P(z) at the root isolated by `root`.
/// Multiplicity >= 3 is a cusp; for a double root P = (z-r)^2 Q the sign of
/// Q(r) separates node (> 0) from acnode (< 0). Throws PolyError when the
/// isolated root is simple.
SingularPoint classify_double_root(const UniPoly& p, const RootInterval& root);

/// Rational parameterization z = q^2 - 2u, p = q^3 - 3uq of
/// p^2 = (z + 2u)(z - u)^2, as polynomials in q.
std::pair<UniPoly, UniPoly> parameterize_singular_cubic(const Rational& u);
/// Same with u kept symbolic: polynomials in (q, u).
std::pair<MultiPoly, MultiPoly> parameterize_singular_cubic();

/// p^2 - (z + 2u)(z - u)^2 with u symbolic.
MultiPoly singular_cubic();

/// Geometric genus of p^2 = P(z) for deg P in {3, 5}: floor((d - 1)/2), where
/// d is the degree of the product of odd-multiplicity squarefree factors.
int genus(const UniPoly& p);

}  // namespace hamcurve
