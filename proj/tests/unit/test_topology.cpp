#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "hamcurve/resultant.hpp"
#include "hamcurve/topology.hpp"
#include "oracles.hpp"

using namespace hamcurve;

namespace {

UniPoly uni(const char* text) { return UniPoly::from_multipoly(MultiPoly::parse(text), "z"); }

const HyperellipticFamily kTrivial({"x"_mp, "t"_mp, "0"_mp});
const HyperellipticFamily kLinear({"4 + 2*t - 2*x"_mp, "3 - 2*t"_mp, "2"_mp});
const HyperellipticFamily kQuadratic({"-2*t^2 + 4*t - 4*x + 4"_mp, "-t^2 - 2*t - 2*x + 3"_mp, "2 - 2*t"_mp});
const HyperellipticFamily kQuintic({"-t/2 + x - 12"_mp, "t/2 + x"_mp, "t/2 + x"_mp, "t + 3"_mp, "1"_mp});

Rational q(const char* s) { return parse_rational(s); }

double max_vertex_residual(const PhaseDiagram& pd, const MultiPoly& delta) {
  const MultiPoly nd = normalize_locus(delta);
  double worst = 0;
  for (const auto& pl : pd.contour)
    for (const auto& p : pl.points)
      worst = std::max(worst, std::abs(to_double(nd.eval({{"x", from_double(p[0])}, {"t", from_double(p[1])}}))));
  return worst;
}

}  // namespace

TEST(AnalyzeRealSection, TrivialCubicRegionD) {
  const auto r = analyze_real_section(kTrivial.at_xt(q("0.2"), -1));
  EXPECT_EQ(r.oval_intervals.size(), 1u);
  ASSERT_TRUE(r.unbounded_branch_start.has_value());
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.component_count, 2);
  EXPECT_EQ(r.simple_root_count, 3);
  EXPECT_LT(r.oval_intervals[0][0], r.oval_intervals[0][1]);
  EXPECT_LT(r.oval_intervals[0][1], *r.unbounded_branch_start);
}

TEST(AnalyzeRealSection, CuspAtOrigin) {
  const auto r = analyze_real_section(uni("z^3"));
  ASSERT_EQ(r.singular_points.size(), 1u);
  EXPECT_EQ(r.singular_points[0].kind, SingularKind::cusp);
  EXPECT_EQ(r.singular_points[0].z, 0.0);
  EXPECT_EQ(r.component_count, 1);
  EXPECT_TRUE(r.connected);
  EXPECT_EQ(*r.unbounded_branch_start, 0.0);
}

TEST(AnalyzeRealSection, NodeAndAcnode) {
  auto r = analyze_real_section(uni("(z-1)^2*(z+2)"));
  EXPECT_EQ(r.component_count, 1);
  EXPECT_TRUE(r.isolated_points.empty());
  ASSERT_EQ(r.singular_points.size(), 1u);
  EXPECT_EQ(r.singular_points[0].kind, SingularKind::node);

  r = analyze_real_section(uni("(z+1)^2*(z-2)"));
  EXPECT_EQ(r.component_count, 1);
  ASSERT_EQ(r.isolated_points.size(), 1u);
  EXPECT_EQ(r.isolated_points[0], -1.0);
  EXPECT_FALSE(r.connected);
}

TEST(AnalyzeRealSection, QuinticTwoBubbles) {
  // The frame at t = -10.45 lies just past the node at t = -10.44823;
  // the two-oval window is (-10.448, -9.107).
  auto r = analyze_real_section(kQuintic.at_xt(7, q("-10.45")));
  EXPECT_EQ(r.oval_intervals.size(), 1u);
  r = analyze_real_section(kQuintic.at_xt(7, -10));
  EXPECT_EQ(r.oval_intervals.size(), 2u);
  EXPECT_TRUE(r.unbounded_branch_start.has_value());
  EXPECT_EQ(r.component_count, 3);
  r = analyze_real_section(kQuintic.at_xt(7, 0));
  EXPECT_TRUE(r.connected);
}

TEST(AnalyzeRealSection, Errors) {
  EXPECT_THROW(analyze_real_section(uni("z^2 + 1")), TopologyError);
  EXPECT_THROW(analyze_real_section(uni("z^4 - 1")), TopologyError);
  EXPECT_THROW(analyze_real_section(uni("-z^3 + 1")), TopologyError);
  EXPECT_THROW(analyze_real_section(uni("z^7")), TopologyError);
}

TEST(AnalyzeRealSection, ComponentFormulaAgainstSamplingOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 600; ++i) {
    const auto inst = oracle::random_separated_odd(rng);
    const auto r = analyze_real_section(inst.p);
    ASSERT_EQ(r.simple_root_count, inst.real_roots);
    EXPECT_EQ(r.component_count, (inst.real_roots + 1) / 2) << inst.p;
    EXPECT_EQ(r.oval_intervals.size(), static_cast<std::size_t>((inst.real_roots - 1) / 2));
    EXPECT_TRUE(r.unbounded_branch_start.has_value());
    EXPECT_EQ(r.component_count, oracle::sampled_components(inst.p, -6, 6)) << inst.p;
    EXPECT_EQ(r.connected, r.component_count == 1 && r.isolated_points.empty());
  }
}

TEST(Sweep, NodeForPositiveX) {
  const auto ev = sweep(kTrivial, q("0.2"), -2, 0);
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_NEAR(ev[0].t_star, -3 * std::pow(10.0, -2.0 / 3), 1e-9);
  EXPECT_NEAR(ev[0].t_star, -0.64633, 1e-4);
  EXPECT_EQ(ev[0].kind, EventKind::node);
  EXPECT_NEAR(ev[0].z_location, std::cbrt(0.1), 1e-9);
  EXPECT_EQ(ev[0].components_before, 2);
  EXPECT_EQ(ev[0].components_after, 1);
}

TEST(Sweep, AcnodeForNegativeX) {
  const auto ev = sweep(kTrivial, q("-0.2"), -2, 0);
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0].kind, EventKind::acnode);
  EXPECT_NEAR(ev[0].z_location, -0.46416, 1e-4);
  EXPECT_NEAR(ev[0].t_star, -0.64633, 1e-4);
}

TEST(Sweep, CuspAtOrigin) {
  const auto ev = sweep(kTrivial, 0, -1, 1);
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0].kind, EventKind::cusp);
  EXPECT_LE(std::abs(ev[0].t_star), 1e-9);
  EXPECT_EQ(ev[0].z_location, 0.0);
}

TEST(Sweep, OscillationAtXEquals4) {
  const auto ev = sweep(kLinear, 4, -2, 11);
  ASSERT_GE(ev.size(), 3u);
  EXPECT_NEAR(ev[0].t_star, 1.46015, 1e-5);
  EXPECT_NEAR(ev[1].t_star, 2.07302, 1e-5);
  EXPECT_NEAR(ev[2].t_star, 8.34183, 1e-5);
  const std::vector<int> profile{ev[0].components_before, ev[0].components_after, ev[1].components_after,
                                 ev[2].components_after};
  EXPECT_EQ(profile, (std::vector<int>{1, 2, 1, 2}));
}

TEST(Sweep, QuinticEventsAtXEquals7) {
  const auto ev = sweep(kQuintic, 7, -14, 0);
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(ev[0].t_star, -10.448232, 1e-5);
  EXPECT_NEAR(ev[1].t_star, -9.1068794, 1e-5);
  EXPECT_NEAR(ev[2].t_star, -3.5202923, 1e-5);
  EXPECT_EQ(ev[0].components_before, 2);
  EXPECT_EQ(ev[0].components_after, 3);
  EXPECT_EQ(ev[1].components_after, 2);
  EXPECT_EQ(ev[2].components_after, 1);
}

TEST(Sweep, EventCompletenessAgainstSturmCount) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> xs(-40, 40);
  for (const HyperellipticFamily* fam : {&kTrivial, &kLinear, &kQuadratic}) {
    for (int i = 0; i < 12; ++i) {
      const Rational x = make_rational(xs(rng), 7);
      const Rational t0 = -6, t1 = 11;
      const auto events = sweep(*fam, x, t0, t1);
      std::set<double> distinct;
      for (const auto& e : events) distinct.insert(e.t_star);
      const UniPoly d = UniPoly::from_multipoly(substitute(fam->discriminant(), {{"x", MultiPoly(x)}}), "t");
      const UniPoly sq = squarefree_part(d);
      // Sturm counts on (t0, t1]; add t0 itself if it is a root.
      const int expected = SturmSequence(sq).count(t0, t1) + (sq.sign_at(t0) == 0 ? 1 : 0);
      EXPECT_EQ(static_cast<int>(distinct.size()), expected) << "x=" << x;
      for (const auto& e : events) {
        EXPECT_LE(std::abs(d.eval(e.t_star)) / 1e6, 1e-6);
        if (e.kind != EventKind::complex) {
          const UniPoly p = fam->at_xt(x, from_double(e.t_star));
          // P and P' nearly vanish at the singular point.
          EXPECT_LT(std::abs(p.eval(e.z_location)), 1e-5);
          EXPECT_LT(std::abs(p.derivative().eval(e.z_location)), 1e-4);
        }
      }
      for (std::size_t k = 1; k < events.size(); ++k) {
        EXPECT_LE(events[k - 1].t_star, events[k].t_star);
        if (events[k - 1].t_star == events[k].t_star) EXPECT_LT(events[k - 1].z_location, events[k].z_location);
      }
    }
  }
}

TEST(Sweep, KindMatchesClassifyAtRationalEvents) {
  // Along t = -3 s^2 / x = 2 s^3 the double root sits at z = s.
  for (int k = -6; k <= 6; ++k) {
    if (k == 0) continue;
    const Rational s = make_rational(k, 3);
    const auto ev = sweep(kTrivial, 2 * s * s * s, -20, 20);
    ASSERT_EQ(ev.size(), 1u);
    const UniPoly p = kTrivial.at_xt(2 * s * s * s, -3 * s * s);
    const auto roots = isolate_real_roots(p);
    for (const auto& r : roots)
      if (r.multiplicity == 2) {
        const auto sp = classify_double_root(p, r);
        EXPECT_EQ(to_string(ev[0].kind), std::string(to_string(sp.kind)));
        EXPECT_NEAR(ev[0].z_location, sp.z, 1e-12);
      }
  }
}

TEST(Sweep, DegenerateAndBadRange) {
  const HyperellipticFamily singular({"2*x^3"_mp, "-3*x^2"_mp, "0"_mp});
  EXPECT_THROW(sweep(singular, 1, -1, 1), DegenerateSweep);
  EXPECT_THROW(sweep(kTrivial, 1, 1, -1), TopologyError);
  EXPECT_TRUE(sweep(kTrivial, 1, 0, 5).empty());
}

TEST(Region, SpecExamples) {
  const MultiPoly d = kTrivial.discriminant();
  EXPECT_EQ(region_classify(d, 0, -1), Region::D);
  EXPECT_EQ(d.eval(std::map<std::string, Rational>{{"x", 0}, {"t", -1}}), 64);
  EXPECT_EQ(region_classify(d, 0, 1), Region::C);
  EXPECT_EQ(d.eval(std::map<std::string, Rational>{{"x", 0}, {"t", 1}}), -64);
  for (int k = -5; k <= 5; ++k) {
    const Rational s = make_rational(k, 4);
    EXPECT_EQ(region_classify(d, 2 * s * s * s, -3 * s * s), Region::boundary);
  }
}

TEST(Region, SignPredictsConnectivityForCubics) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-120, 120);
  for (const HyperellipticFamily* fam : {&kTrivial, &kLinear}) {
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
      const Rational x = make_rational(num(rng), 10), t = make_rational(num(rng), 10);
      const Region r = region_classify(fam->discriminant(), x, t);
      if (r == Region::boundary) continue;
      ++checked;
      EXPECT_EQ(r == Region::C, analyze_real_section(fam->at_xt(x, t)).connected) << x << " " << t;
      EXPECT_EQ(region_classify(*fam, x, t).region, r);
    }
    EXPECT_GT(checked, 250);
  }
}

TEST(Region, QuinticUsesComponentCount) {
  EXPECT_EQ(region_component_count(kQuintic, 7, -10), 3);
  EXPECT_EQ(region_classify(kQuintic, 7, -10).region, Region::D);
  EXPECT_EQ(region_classify(kQuintic, 7, 0).region, Region::C);
  EXPECT_EQ(region_classify(kQuintic, 7, -5).component_count, 2);
}

TEST(PhaseDiagram, TrivialCubicCusp) {
  const MultiPoly d = kTrivial.discriminant();
  const auto pd = trace_phase_diagram(d, {-1, 1, -2, 1}, 128, 2);
  ASSERT_EQ(pd.critical_points.size(), 1u);
  EXPECT_EQ(pd.critical_points[0].kind, CriticalKind::cusp);
  EXPECT_EQ(pd.critical_points[0].label, "m");
  EXPECT_EQ(pd.critical_points[0].x, 0.0);
  EXPECT_EQ(pd.critical_points[0].t, 0.0);
  ASSERT_FALSE(pd.contour.empty());
  EXPECT_LE(max_vertex_residual(pd, d), 1e-9);
  // Vertices follow x = 2 s^3, t = -3 s^2.
  for (const auto& pl : pd.contour)
    for (const auto& p : pl.points) EXPECT_NEAR(p[1], -3 * std::pow(std::abs(p[0]) / 2, 2.0 / 3), 1e-6);
}

TEST(PhaseDiagram, LinearCubicPointsMAndm) {
  const MultiPoly d = kLinear.discriminant();
  const auto pd = trace_phase_diagram(d, {-2, 12, -5, 10}, 512);
  ASSERT_EQ(pd.critical_points.size(), 2u);
  const auto& m = pd.critical_points[0];
  const auto& M = pd.critical_points[1];
  EXPECT_EQ(m.label, "m");
  EXPECT_EQ(m.kind, CriticalKind::cusp);
  EXPECT_NEAR(m.x, 145.0 / 54, 1e-12);
  EXPECT_NEAR(m.t, 5.0 / 6, 1e-12);
  EXPECT_EQ(M.label, "M");
  EXPECT_EQ(M.kind, CriticalKind::max);
  EXPECT_EQ(M.x, 5.0);
  EXPECT_EQ(M.t, 5.0);
  EXPECT_LE(max_vertex_residual(pd, d), 1e-9);
}

TEST(PhaseDiagram, QuadraticCubicFourPoints) {
  const MultiPoly d = kQuadratic.discriminant();
  const auto pd = trace_phase_diagram(d, {-2, 16, -3, 6}, 512);
  ASSERT_EQ(pd.critical_points.size(), 4u);
  std::vector<std::string> labels;
  for (const auto& c : pd.critical_points) {
    labels.push_back(c.label);
    EXPECT_LE(c.residual, 1e-9);
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"m", "Q", "R", "M"}));
  EXPECT_NEAR(pd.critical_points[0].x, 0.782480, 1e-6);
  EXPECT_NEAR(pd.critical_points[0].t, -0.110118, 1e-6);
  EXPECT_NEAR(pd.critical_points[1].x, 7 - 4 * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(pd.critical_points[1].t, 2 - std::sqrt(2.0), 1e-9);
  EXPECT_EQ(pd.critical_points[2].x, 3.75);
  EXPECT_EQ(pd.critical_points[2].t, 2.5);
  EXPECT_NEAR(pd.critical_points[3].t, 2 + std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(pd.critical_points[3].x, 12.656854, 1e-6);
  EXPECT_EQ(pd.critical_points[3].kind, CriticalKind::max);
  EXPECT_LE(max_vertex_residual(pd, d), 1e-9);
}

TEST(PhaseDiagram, DeterministicUnderWorkers) {
  const MultiPoly d = kQuadratic.discriminant();
  const auto a = trace_phase_diagram(d, {-2, 16, -3, 6}, 96, 1);
  const auto b = trace_phase_diagram(d, {-2, 16, -3, 6}, 96, 7);
  ASSERT_EQ(a.contour.size(), b.contour.size());
  for (std::size_t k = 0; k < a.contour.size(); ++k) EXPECT_EQ(a.contour[k].points, b.contour[k].points);
}

TEST(PhaseDiagram, Errors) {
  const MultiPoly d = kTrivial.discriminant();
  EXPECT_THROW(trace_phase_diagram(d, {1, 1, 0, 1}, 64), TopologyError);
  EXPECT_THROW(trace_phase_diagram(d, {0, 1, 2, -1}, 64), TopologyError);
  EXPECT_THROW(trace_phase_diagram(d, {-1, 1, -1, 1}, 15), TopologyError);
  EXPECT_THROW(trace_phase_diagram("x + t + y"_mp, {-1, 1, -1, 1}, 32), TopologyError);
}

TEST(MarchingSquares, EdgeIdsAndCircle) {
  const Grid g{4, {0, 1, 0, 1}};
  EXPECT_EQ(g.horizontal_edge(1, 2), 9);
  EXPECT_EQ(g.vertical_edge(1, 2), 20 + 11);
  EXPECT_EQ(g.edge_count(), 40);

  const Grid c{40, {-2, 2, -2, 2}};
  std::vector<double> v((c.n + 1) * (c.n + 1));
  for (int j = 0; j <= c.n; ++j)
    for (int i = 0; i <= c.n; ++i) v[c.vertex(i, j)] = c.h(i) * c.h(i) + c.v(j) * c.v(j) - 1;
  const auto lines = marching_squares(c, v);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].points.front(), lines[0].points.back());
  for (const auto& p : lines[0].points) EXPECT_NEAR(std::hypot(p[0], p[1]), 1.0, 2.0 / c.n);
}

TEST(MarchingSquares, SaddleUsesCentreMean) {
  const Grid g{1, {0, 1, 0, 1}};
  // Corners (0,0) and (1,1) positive. Mean positive joins them.
  auto lines = marching_squares(g, {1, -1, -1, 3});
  ASSERT_EQ(lines.size(), 2u);
  // The negative corner (1,0) is cut off: bottom edge pairs with right edge.
  const auto touches = [](const Polyline& l, double h, double v) {
    for (const auto& p : l.points)
      if (std::abs(p[0] - h) < 1e-12 && std::abs(p[1] - v) < 1e-12) return true;
    return false;
  };
  EXPECT_TRUE(touches(lines[0], 0.5, 0.0) && touches(lines[0], 1.0, 0.25));
  lines = marching_squares(g, {1, -3, -3, 1});
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_TRUE(touches(lines[0], 0.0, 0.25) || touches(lines[1], 0.0, 0.25));
  EXPECT_TRUE(touches(lines[0], 0.25, 0.0) || touches(lines[0], 0.0, 0.25));
}
