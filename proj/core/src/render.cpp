#include "hamcurve/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "hamcurve/parallel.hpp"

namespace hamcurve {

std::string format_double(double v) {
  if (v == 0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string fixed3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string short_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::vector<double> doubles(const UniPoly& p) {
  std::vector<double> c;
  for (const auto& r : p.coefficients()) c.push_back(r.get_d());
  return c;
}

double horner(const std::vector<double>& c, double x) {
  double v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

double nice_step(double span) {
  const double raw = span / 6;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  return (r < 1.5 ? 1 : r < 3.5 ? 2 : r < 7.5 ? 5 : 10) * mag;
}

// Plot canvas: maps window coordinates to SVG pixels and collects elements.
class Canvas {
 public:
  Canvas(const Window& w, const Style& s) : w_(w), s_(s) {
    pw_ = s.width - kLeft - kRight;
    ph_ = s.height - kTop - kBottom;
  }

  double X(double h) const { return kLeft + (h - w_.h_min) / (w_.h_max - w_.h_min) * pw_; }
  double Y(double v) const { return kTop + (w_.v_max - v) / (w_.v_max - w_.v_min) * ph_; }

  void axes(const std::string& title, const std::string& h_label, const std::string& v_label) {
    out_ << "<text x=\"" << fixed3(s_.width / 2.0) << "\" y=\"24\" text-anchor=\"middle\" "
         << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
    const double x0 = kLeft, x1 = kLeft + pw_, y0 = kTop, y1 = kTop + ph_;
    line(x0, y1, x1, y1, "#000000", 1);
    line(x0, y0, x0, y1, "#000000", 1);
    line(x1, y0, x1, y1, "#bbbbbb", 1);
    line(x0, y0, x1, y0, "#bbbbbb", 1);
    if (w_.h_min < 0 && w_.h_max > 0) line(X(0), y0, X(0), y1, "#dddddd", 1);
    if (w_.v_min < 0 && w_.v_max > 0) line(x0, Y(0), x1, Y(0), "#dddddd", 1);
    const double hs = nice_step(w_.h_max - w_.h_min), vs = nice_step(w_.v_max - w_.v_min);
    for (long k = static_cast<long>(std::ceil(w_.h_min / hs - 1e-9)); k * hs <= w_.h_max + 1e-9 * hs; ++k) {
      const double h = k * hs;
      line(X(h), y1, X(h), y1 + 5, "#000000", 1);
      out_ << "<text x=\"" << fixed3(X(h)) << "\" y=\"" << fixed3(y1 + 20)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << short_number(h)
           << "</text>\n";
    }
    for (long k = static_cast<long>(std::ceil(w_.v_min / vs - 1e-9)); k * vs <= w_.v_max + 1e-9 * vs; ++k) {
      const double v = k * vs;
      line(x0 - 5, Y(v), x0, Y(v), "#000000", 1);
      out_ << "<text x=\"" << fixed3(x0 - 8) << "\" y=\"" << fixed3(Y(v) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << short_number(v)
           << "</text>\n";
    }
    out_ << "<text x=\"" << fixed3(x1) << "\" y=\"" << fixed3(y1 + 38)
         << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"13\">" << h_label << "</text>\n";
    out_ << "<text x=\"" << fixed3(x0 - 8) << "\" y=\"" << fixed3(y0 - 8)
         << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"13\">" << v_label << "</text>\n";
  }

  void path(const std::vector<Point2>& pts) {
    out_ << "<path d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      out_ << (i ? " L" : "M") << fixed3(X(pts[i][0])) << ' ' << fixed3(Y(pts[i][1]));
    out_ << "\" fill=\"none\" stroke=\"" << s_.stroke << "\" stroke-width=\"" << short_number(s_.stroke_width)
         << "\" clip-path=\"url(#plot)\"/>\n";
  }

  void circle(const Point2& p, double r) {
    out_ << "<circle cx=\"" << fixed3(X(p[0])) << "\" cy=\"" << fixed3(Y(p[1])) << "\" r=\"" << short_number(r)
         << "\" fill=\"" << s_.point_fill << "\"/>\n";
  }

  void label(const Point2& p, const std::string& text) {
    out_ << "<text x=\"" << fixed3(X(p[0]) + 6) << "\" y=\"" << fixed3(Y(p[1]) - 6)
         << "\" font-family=\"sans-serif\" font-size=\"13\">" << text << "</text>\n";
  }

  std::string finish() const {
    std::ostringstream doc;
    doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << s_.width << "\" height=\""
        << s_.height << "\" viewBox=\"0 0 " << s_.width << ' ' << s_.height << "\">\n"
        << "<defs><clipPath id=\"plot\"><rect x=\"" << fixed3(kLeft) << "\" y=\"" << fixed3(kTop) << "\" width=\""
        << fixed3(pw_) << "\" height=\"" << fixed3(ph_) << "\"/></clipPath></defs>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << s_.width << "\" height=\"" << s_.height << "\" fill=\"#ffffff\"/>\n"
        << out_.str() << "</svg>\n";
    return doc.str();
  }

 private:
  void line(double xa, double ya, double xb, double yb, const char* color, double width) {
    out_ << "<line x1=\"" << fixed3(xa) << "\" y1=\"" << fixed3(ya) << "\" x2=\"" << fixed3(xb) << "\" y2=\""
         << fixed3(yb) << "\" stroke=\"" << color << "\" stroke-width=\"" << short_number(width) << "\"/>\n";
  }

  static constexpr double kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  Window w_;
  Style s_;
  double pw_, ph_;
  std::ostringstream out_;
};

}  // namespace

SampleResult sample_hyperelliptic(const UniPoly& p, const Window& window, int n) {
  if (n < 2) throw RenderError("sample_hyperelliptic: need at least 2 samples");
  if (window.degenerate()) throw RenderError("sample_hyperelliptic: degenerate window");
  if (p.is_zero()) throw RenderError("sample_hyperelliptic: zero polynomial");

  struct Root {
    double z;
    int multiplicity;
  };
  std::vector<Root> roots;
  if (p.degree() > 0)
    for (const auto& iv : isolate_real_roots(p))
      roots.push_back({iv.is_exact() ? to_double(iv.lo) : refine_root(p, iv, 1e-12), iv.multiplicity});

  // Maximal intervals where P >= 0; infinite ends are clipped later.
  struct Piece {
    double lo, hi;
    bool lo_root, hi_root;
    std::vector<double> interior;
  };
  std::vector<Piece> pieces;
  std::vector<double> isolated;
  const double inf = std::numeric_limits<double>::infinity();
  int s = sign(p.leading());
  std::vector<int> right(roots.size());
  for (std::size_t i = roots.size(); i-- > 0;) {
    right[i] = s;
    if (roots[i].multiplicity % 2) s = -s;
  }
  // s is now the sign left of every root.
  std::optional<Piece> open;
  if (s > 0) open = Piece{-inf, 0, false, false, {}};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int sr = right[i], sl = roots[i].multiplicity % 2 ? -sr : sr;
    const double z = roots[i].z;
    if (sl < 0 && sr > 0) {
      open = Piece{z, 0, true, false, {}};
    } else if (sl > 0 && sr < 0) {
      open->hi = z;
      open->hi_root = true;
      pieces.push_back(*open);
      open.reset();
    } else if (sl < 0 && sr < 0) {
      isolated.push_back(z);
    } else {
      open->interior.push_back(z);
    }
  }
  if (open) {
    open->hi = inf;
    pieces.push_back(*open);
  }

  const auto c = doubles(p);
  SampleResult res;
  int branch = 0;
  for (const auto& pc : pieces) {
    const double a = std::max(pc.lo, window.h_min), b = std::min(pc.hi, window.h_max);
    if (!(a < b)) continue;
    std::vector<double> zs;
    for (int k = 0; k < n; ++k) zs.push_back(k == n - 1 ? b : a + (b - a) * k / (n - 1));
    for (double z : pc.interior)
      if (a < z && z < b) zs.push_back(z);
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    auto is_root = [&](double z) {
      if ((pc.lo_root && z == pc.lo) || (pc.hi_root && z == pc.hi)) return true;
      return std::find(pc.interior.begin(), pc.interior.end(), z) != pc.interior.end();
    };
    Polyline up, down;
    up.branch_id = branch++;
    down.branch_id = branch++;
    for (double z : zs) {
      const double v = is_root(z) ? 0.0 : std::sqrt(std::max(horner(c, z), 0.0));
      up.points.push_back({z, v});
      down.points.push_back({z, v == 0.0 ? 0.0 : -v});
    }
    res.polylines.push_back(std::move(up));
    res.polylines.push_back(std::move(down));
  }
  for (double z : isolated) {
    if (z < window.h_min || z > window.h_max) continue;
    Polyline pt;
    pt.points.push_back({z, 0.0});
    pt.branch_id = branch++;
    pt.isolated = true;
    res.polylines.push_back(std::move(pt));
  }
  res.warning = res.polylines.empty();
  return res;
}

std::vector<Polyline> contour_implicit(const MultiPoly& f, const std::string& h_var, const std::string& v_var,
                                       const Window& window, int grid_n, unsigned workers) {
  if (grid_n < 16) throw RenderError("contour_implicit: grid must be at least 16");
  if (window.degenerate()) throw RenderError("contour_implicit: degenerate window");
  for (const auto& v : f.variables())
    if (v != h_var && v != v_var) throw RenderError("contour_implicit: unbound variable '" + v + "'");
  const Grid grid{grid_n, window};
  const auto in_h = f.coefficients_in(h_var);
  std::vector<double> values(static_cast<std::size_t>(grid_n + 1) * (grid_n + 1));
  parallel_for(static_cast<std::size_t>(grid_n + 1), workers, [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    std::vector<double> c;
    for (const auto& k : in_h) c.push_back(k.is_constant() ? k.constant_term().get_d() : k.eval(std::map<std::string, double>{{v_var, grid.v(j)}}));
    for (int i = 0; i <= grid_n; ++i) values[grid.vertex(i, j)] = horner(c, grid.h(i));
  });
  return marching_squares(grid, values, {}, workers);
}

std::string FrameSpec::title() const {
  std::string t;
  for (const auto& [name, value] : params) {
    if (!t.empty()) t += ", ";
    t += name + "=" + short_number(to_double(value));
  }
  return t;
}

void FrameSpec::validate() const {
  if (window.degenerate()) throw RenderError("frame: degenerate window");
  if (samples < 2) throw RenderError("frame: need at least 2 samples");
  if (grid_n < 16) throw RenderError("frame: grid must be at least 16");
}

RenderedFrame render_frame(const FrameSpec& frame) {
  frame.validate();
  std::map<std::string, Rational> values;
  std::map<std::string, MultiPoly> bindings;
  for (const auto& [name, v] : frame.params) {
    values[name] = v;
    bindings[name] = MultiPoly(v);
  }
  RenderedFrame out;
  if (frame.family) {
    const SampleResult s = sample_hyperelliptic(frame.family->at(values), frame.window, frame.samples);
    out.polylines = s.polylines;
    out.warning = s.warning;
  } else {
    out.polylines = contour_implicit(substitute(frame.implicit, bindings), frame.h_var, frame.v_var, frame.window,
                                     frame.grid_n);
    out.warning = out.polylines.empty();
  }
  out.svg = emit_svg(out.polylines, frame);
  return out;
}

std::string emit_svg(const std::vector<Polyline>& polylines, const FrameSpec& frame) {
  Canvas cv(frame.window, frame.style);
  cv.axes(frame.title(), frame.h_var, frame.v_var);
  for (const auto& pl : polylines) {
    if (pl.isolated || pl.points.size() == 1)
      cv.circle(pl.points.front(), 2);
    else if (pl.points.size() >= 2)
      cv.path(pl.points);
  }
  return cv.finish();
}

std::string emit_csv(const std::vector<Polyline>& polylines) {
  std::string out = "branch,z,p\n";
  for (const auto& pl : polylines)
    for (const auto& pt : pl.points)
      out += std::to_string(pl.branch_id) + "," + format_double(pt[0]) + "," + format_double(pt[1]) + "\n";
  return out;
}

std::vector<std::string> animate(const std::vector<FrameSpec>& frames, unsigned workers) {
  return parallel_map(frames.size(), workers, [&](std::size_t i) { return render_frame(frames[i]).svg; });
}

std::string emit_phase_svg(const PhaseDiagram& pd, const std::string& title, const Style& style) {
  Canvas cv(pd.window, style);
  cv.axes(title, "x", "t");
  for (const auto& pl : pd.contour)
    if (pl.points.size() >= 2) cv.path(pl.points);
  for (const auto& cp : pd.critical_points) {
    cv.circle({cp.x, cp.t}, 3);
    cv.label({cp.x, cp.t}, cp.label);
  }
  return cv.finish();
}

std::string emit_phase_csv(const PhaseDiagram& pd) {
  std::string out = "x,t\n";
  for (std::size_t k = 0; k < pd.contour.size(); ++k) {
    if (k) out += "\n";
    for (const auto& pt : pd.contour[k].points) out += format_double(pt[0]) + "," + format_double(pt[1]) + "\n";
  }
  return out;
}

}  // namespace hamcurve
