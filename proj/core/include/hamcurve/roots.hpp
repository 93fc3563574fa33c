#pragma once

#include <vector>

#include "hamcurve/unipoly.hpp"

namespace hamcurve {

/// Isolating interval for one distinct real root. Either lo == hi (the root
/// is exactly lo) or lo < hi, neither endpoint is a root, and the open
/// interval contains exactly one distinct root.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree
  int multiplicity = 1;
};

/// Yun's algorithm: P = lc * prod factor_i^multiplicity_i with pairwise
/// coprime squarefree monic factors. Throws on the zero polynomial.
std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& p);

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  /// Sign variations at x (zeros skipped).
  int variations(const Rational& x) const;
  /// Number of distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UniPoly> chain_;
};

/// Strict bound: every complex root has |r| < cauchy_bound(p).
Rational cauchy_bound(const UniPoly& p);

/// Complete, disjoint isolation of the distinct real roots (sorted
/// increasingly), each tagged with its multiplicity in p. Exact over Q:
/// Sturm counting on each squarefree factor, with linear factors giving
/// exact point intervals.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

/// Roots lying in the closed interval [lo, hi].
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Bisects `iv` (which must isolate a root of the squarefree `sqfree`) until
/// its width is at most `width`.
RootInterval refine_interval(const UniPoly& sqfree, RootInterval iv, const Rational& width);

/// Approximates the root isolated by `iv` to within `tol`. Works for any
/// multiplicity by bisecting on the squarefree part of p. Throws when the
/// interval does not bracket a sign change of that squarefree part.
double refine_root(const UniPoly& p, const RootInterval& iv, double tol);

/// Sign of g at the unique root of the squarefree f isolated by iv. Requires
/// g to be nonzero at that root.
int sign_at_root(const UniPoly& g, const UniPoly& f, RootInterval iv);

}  // namespace hamcurve
