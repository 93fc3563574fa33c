#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamcurve/contour.hpp"
#include "hamcurve/curves.hpp"

namespace hamcurve {

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The discriminant vanishes identically along the requested line.
class DegenerateSweep : public TopologyError {
 public:
  using TopologyError::TopologyError;
};

/// Real section of p^2 = P(z). Components are the maximal intervals where
/// P >= 0 (bounded ones are ovals, the last is the unbounded branch); an
/// isolated point is reported separately and not counted as a component.
struct RealSectionReport {
  std::vector<std::array<double, 2>> oval_intervals;
  std::optional<double> unbounded_branch_start;
  std::vector<double> isolated_points;
  std::vector<SingularPoint> singular_points;
  bool connected = true;
  int component_count = 0;
  int simple_root_count = 0;
};

/// deg P in {3, 5} with positive leading coefficient, else TopologyError.
/// Root locations are refined to `tol`.
RealSectionReport analyze_real_section(const UniPoly& p, double tol = 1e-12);

enum class EventKind { node, cusp, acnode, complex };

const char* to_string(EventKind k);

/// A zero of the discriminant along x = const. `complex` marks a multiple
/// root that is a non-real conjugate pair; z_location is NaN then.
struct TransitionEvent {
  double t_star = 0.0;
  EventKind kind = EventKind::node;
  double z_location = 0.0;
  int components_before = 0;
  int components_after = 0;
};

/// Events of the family along x = x_fixed for t in [t0, t1], sorted by t
/// and, for equal t, by z. t_star is refined to `tol`. Throws
/// DegenerateSweep when the discriminant vanishes identically on the line.
std::vector<TransitionEvent> sweep(const HyperellipticFamily& family, const Rational& x_fixed, const Rational& t0,
                                   const Rational& t1, double tol = 1e-9);
inline std::vector<TransitionEvent> sweep(const CubicCurve& c, const Rational& x, const Rational& t0,
                                          const Rational& t1, double tol = 1e-9) {
  return sweep(c.family(), x, t0, t1, tol);
}
inline std::vector<TransitionEvent> sweep(const QuinticCurve& q, const Rational& x, const Rational& t0,
                                          const Rational& t1, double tol = 1e-9) {
  return sweep(q.family(), x, t0, t1, tol);
}

enum class CriticalKind { max, min, cusp, inflection };

const char* to_string(CriticalKind k);

/// A point of the locus where it is tangent to x = const (Delta = Delta_t = 0).
/// max/min refer to x as a function of t along the locus; cusp means
/// Delta_x vanishes too.
struct CriticalPoint {
  double x = 0.0;
  double t = 0.0;
  CriticalKind kind = CriticalKind::max;
  std::string label;
  /// |Delta| at (x, t) after normalization.
  double residual = 0.0;
};

/// Horizontal axis x, vertical axis t.
struct PhaseDiagram {
  Window window;
  int grid_n = 0;
  std::vector<Polyline> contour;
  std::vector<CriticalPoint> critical_points;
};

/// Delta divided by its largest absolute coefficient. The locus is scale
/// free; tolerances on |Delta| refer to this normalization.
MultiPoly normalize_locus(const MultiPoly& delta);

/// Marching squares on grid_n x grid_n cells with exact per-edge bisection
/// to adjacent doubles, plus the exact critical-point solve. Labels: locus
/// cusps "m", "m2", ...; the maximum with the largest x is "M", the other
/// maxima "Q", "R", "S", ... by increasing x; other minima "n", "n2", ...
PhaseDiagram trace_phase_diagram(const MultiPoly& delta, const Window& window, int grid_n = 512,
                                 unsigned workers = 0);

/// Only the critical points (no contour).
std::vector<CriticalPoint> locus_critical_points(const MultiPoly& delta, const Window& window);

enum class Region { C, D, boundary };

const char* to_string(Region r);

/// Cubic convention: Delta > 0 is D (disconnected), Delta < 0 is C, and
/// |Delta| <= tol on the normalized discriminant is the boundary.
Region region_classify(const MultiPoly& delta, const Rational& x, const Rational& t, double tol = 1e-9);

struct RegionReport {
  Region region = Region::C;
  int component_count = 1;
};

/// Cubics use the sign of Delta; other degrees label D whenever the real
/// section has more than one component (Delta = 0 is still the boundary).
RegionReport region_classify(const HyperellipticFamily& family, const Rational& x, const Rational& t,
                             double tol = 1e-9);

int region_component_count(const HyperellipticFamily& family, const Rational& x, const Rational& t);

}  // namespace hamcurve
