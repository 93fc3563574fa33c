#include "hamcurve/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hamcurve/parallel.hpp"
#include "hamcurve/resultant.hpp"

namespace hamcurve {

namespace {

Rational pow10_inv(unsigned k) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
  return Rational(mpz_class(1), d);
}

UniPoly scaled(const UniPoly& p, const Rational& c) { return UniPoly({c}, p.variable()) * p; }

Rational max_abs_coeff(const UniPoly& p) {
  Rational m = 0;
  for (const auto& c : p.coefficients()) m = std::max(m, Rational(abs(c)));
  return m;
}

Rational refined_point(const UniPoly& p, const RootInterval& iv, const Rational& width) {
  if (iv.is_exact()) return iv.lo;
  return refine_interval(squarefree_part(p), iv, width).midpoint();
}

void require_only(const MultiPoly& p, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& v : p.variables())
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return v == a; }) == allowed.end())
      throw TopologyError(std::string(what) + ": unbound parameter '" + v + "'");
}

struct Singular {
  double z;
  EventKind kind;
};

EventKind event_kind(SingularKind k) {
  switch (k) {
    case SingularKind::node: return EventKind::node;
    case SingularKind::cusp: return EventKind::cusp;
    case SingularKind::acnode: return EventKind::acnode;
  }
  return EventKind::node;
}

// Real multiple roots of an exact polynomial.
std::vector<Singular> exact_singular(const UniPoly& p) {
  std::vector<Singular> out;
  for (const auto& r : isolate_real_roots(p)) {
    if (r.multiplicity < 2) continue;
    const SingularPoint sp = classify_double_root(p, r);
    out.push_back({sp.z, event_kind(sp.kind)});
  }
  return out;
}

// Multiple roots of a polynomial that is within ~1e-60 of one with a
// multiple root (the discriminant root was only approximated). A cusp is a
// root of P'' where P and P' are both negligible; a double point a root of
// P' where P is negligible, typed by the sign of P'' there.
std::vector<Singular> approximate_singular(const UniPoly& p) {
  const UniPoly pn = scaled(p, 1 / max_abs_coeff(p));
  const UniPoly d1 = pn.derivative(), d2 = d1.derivative();
  const Rational small = pow10_inv(30), width = pow10_inv(40);
  std::vector<Singular> out;
  std::vector<Rational> cusps;
  for (const auto& iv : isolate_real_roots(d2)) {
    const Rational z = refined_point(d2, iv, width);
    if (abs(pn.eval(z)) < small && abs(d1.eval(z)) < small) {
      cusps.push_back(z);
      out.push_back({to_double(z), EventKind::cusp});
    }
  }
  const Rational near = pow10_inv(10);
  for (const auto& iv : isolate_real_roots(d1)) {
    const Rational z = refined_point(d1, iv, width);
    if (abs(pn.eval(z)) >= small) continue;
    if (std::any_of(cusps.begin(), cusps.end(), [&](const Rational& c) { return abs(c - z) < near; })) continue;
    out.push_back({to_double(z), sign(d2.eval(z)) > 0 ? EventKind::node : EventKind::acnode});
  }
  std::sort(out.begin(), out.end(), [](const Singular& a, const Singular& b) { return a.z < b.z; });
  return out;
}

// Narrows a non-exact interval until it is decided whether its root lies in
// [t0, t1].
bool settle_in_range(const UniPoly& sqfree, RootInterval& iv, const Rational& t0, const Rational& t1) {
  if (iv.is_exact()) return t0 <= iv.lo && iv.lo <= t1;
  for (const Rational* e : {&t0, &t1}) {
    if (iv.lo < *e && *e < iv.hi && sqfree.sign_at(*e) == 0) {
      iv.lo = iv.hi = *e;
      return true;
    }
  }
  while (true) {
    if (iv.hi < t0 || iv.lo > t1) return false;
    if (t0 <= iv.lo && iv.hi <= t1) return true;
    iv = refine_interval(sqfree, iv, (iv.hi - iv.lo) / 4);
  }
}

}  // namespace

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::node: return "node";
    case EventKind::cusp: return "cusp";
    case EventKind::acnode: return "acnode";
    case EventKind::complex: return "complex";
  }
  return "?";
}

const char* to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::max: return "max";
    case CriticalKind::min: return "min";
    case CriticalKind::cusp: return "cusp";
    case CriticalKind::inflection: return "inflection";
  }
  return "?";
}

const char* to_string(Region r) {
  switch (r) {
    case Region::C: return "C";
    case Region::D: return "D";
    case Region::boundary: return "boundary";
  }
  return "?";
}

RealSectionReport analyze_real_section(const UniPoly& p, double tol) {
  if (p.degree() != 3 && p.degree() != 5)
    throw TopologyError("analyze_real_section: degree must be 3 or 5, got " + std::to_string(p.degree()));
  if (sign(p.leading()) <= 0) throw TopologyError("analyze_real_section: leading coefficient must be positive");

  const auto roots = isolate_real_roots(p);
  const std::size_t k = roots.size();
  // Sign of P just right of each root; positive beyond the largest.
  std::vector<int> right(k, 1);
  for (std::size_t i = k; i-- > 1;) right[i - 1] = roots[i].multiplicity % 2 ? -right[i] : right[i];

  RealSectionReport rep;
  std::optional<double> start;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& r = roots[i];
    const int sr = right[i];
    const int sl = r.multiplicity % 2 ? -sr : sr;
    const double z = r.is_exact() ? to_double(r.lo) : refine_root(p, r, tol);
    if (r.multiplicity == 1) ++rep.simple_root_count;
    if (r.multiplicity >= 2) rep.singular_points.push_back(classify_double_root(p, r));
    if (sl < 0 && sr > 0) {
      start = z;
    } else if (sl > 0 && sr < 0) {
      rep.oval_intervals.push_back({*start, z});
      start.reset();
    } else if (sl < 0 && sr < 0) {
      rep.isolated_points.push_back(z);
    }
  }
  rep.unbounded_branch_start = start;
  rep.component_count = static_cast<int>(rep.oval_intervals.size()) + (start ? 1 : 0);
  rep.connected = rep.component_count == 1 && rep.isolated_points.empty();
  return rep;
}

std::vector<TransitionEvent> sweep(const HyperellipticFamily& family, const Rational& x_fixed, const Rational& t0,
                                   const Rational& t1, double tol) {
  if (!(t0 < t1)) throw TopologyError("sweep: empty t range");
  if (!(tol > 0)) throw TopologyError("sweep: tolerance must be positive");
  const std::map<std::string, MultiPoly> at_x{{"x", MultiPoly(x_fixed)}};
  const MultiPoly line = substitute(family.discriminant(), at_x);
  require_only(line, {"t"}, "sweep");
  if (line.is_zero()) throw DegenerateSweep("sweep: discriminant vanishes identically on the line x = " + to_string(x_fixed));
  const MultiPoly pz = substitute(family.polynomial(), at_x);
  require_only(pz, {"z", "t"}, "sweep");
  auto slice = [&](const Rational& t) {
    return UniPoly::from_multipoly(substitute(pz, {{"t", MultiPoly(t)}}), "z");
  };

  const UniPoly dt = UniPoly::from_multipoly(line, "t");
  if (dt.degree() < 1) return {};
  const UniPoly sq = squarefree_part(dt);
  auto all = isolate_real_roots(dt);
  const std::size_t m = all.size();

  // sample[i] lies strictly between root i-1 and root i.
  std::vector<Rational> sample(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    if (i == 0)
      sample[i] = m ? Rational(all[0].lo - 1) : t0;
    else if (i == m)
      sample[i] = all[m - 1].hi + 1;
    else
      sample[i] = (all[i - 1].hi + all[i].lo) / 2;
  }
  std::vector<int> comps(m + 1, -1);
  auto components = [&](std::size_t i) {
    if (comps[i] < 0) comps[i] = analyze_real_section(slice(sample[i])).component_count;
    return comps[i];
  };

  std::vector<TransitionEvent> out;
  const Rational width = pow10_inv(60);
  for (std::size_t i = 0; i < m; ++i) {
    RootInterval iv = all[i];
    if (!settle_in_range(sq, iv, t0, t1)) continue;
    TransitionEvent ev;
    ev.t_star = iv.is_exact() ? to_double(iv.lo) : refine_root(dt, iv, tol);
    ev.components_before = components(i);
    ev.components_after = components(i + 1);
    const std::vector<Singular> sing =
        iv.is_exact() ? exact_singular(slice(iv.lo)) : approximate_singular(slice(refined_point(dt, iv, width)));
    if (sing.empty()) {
      ev.kind = EventKind::complex;
      ev.z_location = std::numeric_limits<double>::quiet_NaN();
      out.push_back(ev);
    }
    for (const auto& s : sing) {
      ev.kind = s.kind;
      ev.z_location = s.z;
      out.push_back(ev);
    }
  }
  return out;
}

MultiPoly normalize_locus(const MultiPoly& delta) {
  Rational m = 0;
  for (const auto& [e, c] : delta.terms()) m = std::max(m, Rational(abs(c)));
  if (m == 0) return delta;
  return scale(delta, 1 / m);
}

namespace {

// Exact value of p at the double v.
Rational eval_at(const UniPoly& p, double v) { return p.eval(from_double(v)); }

// Bisects p on [a, b] (values >= 0 count as positive) down to adjacent
// doubles and returns the endpoint with the smaller exact |p|.
double bisect_edge(const UniPoly& p, double a, double b) {
  const bool sa = sign(eval_at(p, a)) >= 0;
  while (true) {
    const double mid = a + (b - a) / 2;
    if (mid <= a || mid >= b) break;
    if ((sign(eval_at(p, mid)) >= 0) == sa)
      a = mid;
    else
      b = mid;
  }
  return abs(eval_at(p, a)) <= abs(eval_at(p, b)) ? a : b;
}

UniPoly restrict(const std::vector<MultiPoly>& coeffs, const std::string& other, const Rational& value,
                 const std::string& var) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& k : coeffs) c.push_back(k.is_constant() ? k.constant_term() : k.eval({{other, value}}));
  return UniPoly(std::move(c), var);
}

std::string letter_label(std::size_t k) {
  static const char* names[] = {"Q", "R", "S", "T", "U", "V", "W"};
  return k < 7 ? names[k] : "Q" + std::to_string(k - 5);
}

}  // namespace

std::vector<CriticalPoint> locus_critical_points(const MultiPoly& delta, const Window& window) {
  if (window.degenerate()) throw TopologyError("phase diagram: degenerate window");
  const MultiPoly nd = normalize_locus(delta);
  require_only(nd, {"x", "t"}, "phase diagram");
  if (!nd.depends_on("x") || !nd.depends_on("t")) return {};
  const MultiPoly d_t = differentiate(nd, "t");
  const MultiPoly d_x = differentiate(nd, "x");
  const MultiPoly d_tt = differentiate(d_t, "t");

  const MultiPoly r1 = resultant(nd, d_t, "t");
  const MultiPoly r2 = resultant(nd, d_t, "x");
  if (r1.is_zero() || r2.is_zero()) throw TopologyError("phase diagram: discriminant has a repeated factor");
  const UniPoly ux = UniPoly::from_multipoly(r1, "x"), ut = UniPoly::from_multipoly(r2, "t");
  if (ux.degree() < 1 || ut.degree() < 1) return {};

  const Rational width = pow10_inv(40), small = pow10_inv(20);
  std::vector<Rational> xs, ts;
  for (const auto& iv : isolate_real_roots(ux, from_double(window.h_min), from_double(window.h_max)))
    xs.push_back(refined_point(ux, iv, width));
  for (const auto& iv : isolate_real_roots(ut, from_double(window.v_min), from_double(window.v_max)))
    ts.push_back(refined_point(ut, iv, width));

  std::vector<CriticalPoint> out;
  for (const auto& x : xs) {
    for (const auto& t : ts) {
      const std::map<std::string, Rational> at{{"x", x}, {"t", t}};
      if (abs(nd.eval(at)) >= small || abs(d_t.eval(at)) >= small) continue;
      CriticalPoint cp;
      cp.x = to_double(x);
      cp.t = to_double(t);
      const Rational gx = d_x.eval(at), gtt = d_tt.eval(at);
      if (abs(gx) < small)
        cp.kind = CriticalKind::cusp;
      else if (abs(gtt) < small)
        cp.kind = CriticalKind::inflection;
      else
        // Along the locus x''(t) = -Delta_tt / Delta_x.
        cp.kind = sign(gtt) * sign(gx) > 0 ? CriticalKind::max : CriticalKind::min;
      cp.residual = to_double(abs(nd.eval({{"x", from_double(cp.x)}, {"t", from_double(cp.t)}})));
      out.push_back(cp);
    }
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.x != b.x ? a.x < b.x : a.t < b.t;
  });

  std::size_t cusps = 0, minima = 0, inflections = 0, others = 0;
  std::ptrdiff_t top = -1;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].kind == CriticalKind::max) top = static_cast<std::ptrdiff_t>(i);
  auto numbered = [](const char* base, std::size_t k) { return k == 0 ? std::string(base) : base + std::to_string(k + 1); };
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& cp = out[i];
    switch (cp.kind) {
      case CriticalKind::cusp: cp.label = numbered("m", cusps++); break;
      case CriticalKind::min: cp.label = numbered("n", minima++); break;
      case CriticalKind::inflection: cp.label = numbered("i", inflections++); break;
      case CriticalKind::max: cp.label = static_cast<std::ptrdiff_t>(i) == top ? "M" : letter_label(others++); break;
    }
  }
  return out;
}

PhaseDiagram trace_phase_diagram(const MultiPoly& delta, const Window& window, int grid_n, unsigned workers) {
  if (window.degenerate()) throw TopologyError("phase diagram: degenerate window");
  if (grid_n < 16) throw TopologyError("phase diagram: grid must be at least 16");
  const MultiPoly nd = normalize_locus(delta);
  require_only(nd, {"x", "t"}, "phase diagram");

  PhaseDiagram pd;
  pd.window = window;
  pd.grid_n = grid_n;
  const Grid grid{grid_n, window};
  const int n = grid_n;
  const auto in_x = nd.coefficients_in("x"), in_t = nd.coefficients_in("t");

  // Row j: Delta(x, t_j) in x; column i: Delta(x_i, t) in t.
  std::vector<UniPoly> rows = parallel_map(static_cast<std::size_t>(n + 1), workers, [&](std::size_t j) {
    return restrict(in_x, "t", from_double(grid.v(static_cast<int>(j))), "x");
  });
  std::vector<UniPoly> cols = parallel_map(static_cast<std::size_t>(n + 1), workers, [&](std::size_t i) {
    return restrict(in_t, "x", from_double(grid.h(static_cast<int>(i))), "t");
  });

  std::vector<double> values(static_cast<std::size_t>(n + 1) * (n + 1));
  parallel_for(static_cast<std::size_t>(n + 1), workers, [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    const auto& c = rows[jj].coefficients();
    std::vector<double> cd(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) cd[k] = c[k].get_d();
    for (int i = 0; i <= n; ++i) {
      const double x = grid.h(i);
      double v = 0, bound = 0;
      for (std::size_t k = cd.size(); k-- > 0;) {
        v = v * x + cd[k];
        bound = bound * std::abs(x) + std::abs(cd[k]);
      }
      // Near zero the sign is taken from exact arithmetic.
      if (std::abs(v) <= 1e-9 * bound) v = sign(eval_at(rows[jj], x));
      values[grid.vertex(i, j)] = v;
    }
  });

  auto locate = [&](int, int i, int j, bool horizontal) -> Point2 {
    if (horizontal) return {bisect_edge(rows[j], grid.h(i), grid.h(i + 1)), grid.v(j)};
    return {grid.h(i), bisect_edge(cols[i], grid.v(j), grid.v(j + 1))};
  };
  pd.contour = marching_squares(grid, values, locate, workers);
  pd.critical_points = locus_critical_points(delta, window);
  return pd;
}

Region region_classify(const MultiPoly& delta, const Rational& x, const Rational& t, double tol) {
  const MultiPoly nd = normalize_locus(delta);
  require_only(nd, {"x", "t"}, "region_classify");
  const Rational v = nd.eval({{"x", x}, {"t", t}});
  if (abs(v) <= from_double(tol)) return Region::boundary;
  return sign(v) > 0 ? Region::D : Region::C;
}

RegionReport region_classify(const HyperellipticFamily& family, const Rational& x, const Rational& t, double tol) {
  RegionReport rep;
  rep.component_count = region_component_count(family, x, t);
  const Region sign_region = region_classify(family.discriminant(), x, t, tol);
  if (family.degree() == 3 || sign_region == Region::boundary)
    rep.region = sign_region;
  else
    rep.region = rep.component_count > 1 ? Region::D : Region::C;
  return rep;
}

int region_component_count(const HyperellipticFamily& family, const Rational& x, const Rational& t) {
  return analyze_real_section(family.at_xt(x, t)).component_count;
}

}  // namespace hamcurve
