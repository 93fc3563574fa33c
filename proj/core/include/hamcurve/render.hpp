#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamcurve/contour.hpp"
#include "hamcurve/curves.hpp"
#include "hamcurve/topology.hpp"

namespace hamcurve {

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SampleResult {
  std::vector<Polyline> polylines;
  /// P < 0 on the whole window; polylines is empty.
  bool warning = false;
};

/// Branches p = +-sqrt(P(z)) on each maximal interval of P >= 0 inside the
/// horizontal window range, n samples each, with endpoints at roots refined
/// to 1e-12 and interior multiple roots added as vertices. Branch 2k is the
/// upper half, 2k+1 its mirror. Isolated points are single-point polylines.
SampleResult sample_hyperelliptic(const UniPoly& p, const Window& window, int n);

/// Zero contour of f(h_var, v_var) by marching squares with linear
/// interpolation. Other variables must already be substituted.
std::vector<Polyline> contour_implicit(const MultiPoly& f, const std::string& h_var, const std::string& v_var,
                                       const Window& window, int grid_n, unsigned workers = 1);

struct Style {
  double stroke_width = 1.5;
  std::string stroke = "#1f4e9c";
  std::string point_fill = "#c0392b";
  int width = 600;
  int height = 750;
};

/// One frame of a figure: either a hyperelliptic slice p^2 = P(z) or an
/// implicit plane curve, at the given parameter values.
struct FrameSpec {
  std::optional<HyperellipticFamily> family;
  MultiPoly implicit;
  std::string h_var = "z", v_var = "p";
  /// Parameter values in display order ("x", "t", ...).
  std::vector<std::pair<std::string, Rational>> params;
  Window window{-3, 3, -3.75, 3.75};
  int samples = 400;
  int grid_n = 256;
  Style style;

  /// "x=0.2, t=-0.5".
  std::string title() const;
  /// Throws RenderError on a degenerate window, samples < 2 or grid < 16.
  void validate() const;
};

struct RenderedFrame {
  std::vector<Polyline> polylines;
  bool warning = false;
  std::string svg;
};

RenderedFrame render_frame(const FrameSpec& frame);

/// Standalone SVG: axes with ticks, one path per polyline, isolated points as
/// radius-2 circles, and the frame title.
std::string emit_svg(const std::vector<Polyline>& polylines, const FrameSpec& frame);

/// Header "branch,z,p" and one row per vertex.
std::string emit_csv(const std::vector<Polyline>& polylines);

/// Frames render independently on up to `workers` threads; output in frame
/// order.
std::vector<std::string> animate(const std::vector<FrameSpec>& frames, unsigned workers = 0);

/// Phase diagram: locus polylines in (x, t) and labelled critical points.
std::string emit_phase_svg(const PhaseDiagram& pd, const std::string& title, const Style& style = {});

/// "x,t" rows with a blank line between polylines.
std::string emit_phase_csv(const PhaseDiagram& pd);

/// Shortest round-trip text for a double.
std::string format_double(double v);

}  // namespace hamcurve
