#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hamcurve/curves.hpp"
#include "hamcurve/deformations.hpp"

using namespace hamcurve;

namespace {

SolutionAnsatz symbolic(const std::string& family) { return solution_family(family, symbolic_constants(family)); }

MultiPoly bound(const SolutionAnsatz& a, const std::string& field) { return a.bindings.at(field).numerator(); }

}  // namespace

TEST(Catalog, NamesAndShapes) {
  const std::vector<std::string> names = {"quadric-constrained", "benney-2p1", "dkp",        "dvn",
                                          "ellipse",             "ellipse-11", "ellipse-uv", "ellipse-eccentricity",
                                          "hodograph-linear",    "dkdv3",      "burgers-hopf", "dkdv5",
                                          "dkdv5-alt"};
  for (const auto& n : names) EXPECT_NO_THROW(lookup_system(n)) << n;
  EXPECT_EQ(system_catalog().size(), names.size());

  const HydroSystem& k = lookup_system("dkdv3");
  EXPECT_EQ(k.fields, (std::vector<std::string>{"u3", "u1", "u0"}));
  EXPECT_EQ(k.independents, (std::vector<std::string>{"x", "t"}));
  EXPECT_EQ(k.residuals().size(), 3u);

  const HydroSystem& bh = lookup_system("burgers-hopf");
  ASSERT_EQ(bh.fields.size(), 1u);
  EXPECT_EQ(bh.residuals().at(0), "u_x - 3*u*u_y"_mp);

  EXPECT_THROW(lookup_system("nonexistent"), DeformationError);
  EXPECT_TRUE(lookup_system("ellipse-eccentricity").numeric_only);
}

TEST(Catalog, EverySystemValidates) {
  for (const auto& s : system_catalog()) EXPECT_NO_THROW(s.validate()) << s.name;
  HydroSystem bad{"bad", "", {"u"}, {"x"}, {}, {"u_x + w"}};
  EXPECT_THROW(bad.validate(), DeformationError);
  bad.residual_texts = {"u_y"};
  EXPECT_THROW(bad.validate(), DeformationError);
}

TEST(Catalog, Dkdv5VariantsDifferOnlyInU4Coefficient) {
  const auto a = lookup_system("dkdv5").residuals();
  const auto b = lookup_system("dkdv5-alt").residuals();
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(b[0] - a[0], "1/2*u4_x*u4"_mp);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(ParseDerivative, Symbols) {
  std::string f;
  std::vector<std::string> by;
  const std::vector<std::string> fields{"d", "a10"}, ind{"x1", "x2", "t"};
  ASSERT_TRUE(parse_derivative("d_x1_t", fields, ind, f, by));
  EXPECT_EQ(f, "d");
  EXPECT_EQ(by, (std::vector<std::string>{"x1", "t"}));
  EXPECT_TRUE(parse_derivative("a10_x2", fields, ind, f, by));
  EXPECT_FALSE(parse_derivative("d", fields, ind, f, by));
  EXPECT_FALSE(parse_derivative("d_y", fields, ind, f, by));
  EXPECT_FALSE(parse_derivative("e_t", fields, ind, f, by));
}

TEST(Residual, SymbolicFamiliesVanish) {
  EXPECT_TRUE(all_zero(residual(lookup_system("dkdv3"), symbolic("kdv3-linear"))));
  EXPECT_TRUE(all_zero(residual(lookup_system("dkdv3"), symbolic("kdv3-quadratic"))));
  EXPECT_TRUE(all_zero(residual(lookup_system("dkdv5"), symbolic("kdv5-linear"))));
  EXPECT_TRUE(all_zero(residual(lookup_system("dkdv5-alt"), symbolic("kdv5-linear"))));
  EXPECT_TRUE(all_zero(residual(lookup_system("benney-2p1"), symbolic("benney-simple"))));
  EXPECT_TRUE(all_zero(residual(lookup_system("ellipse-uv"), symbolic("hirota-satsuma"))));
  EXPECT_TRUE(all_zero(residual(lookup_system("burgers-hopf"), symbolic("bh-rational"))));
}

TEST(Residual, BrokenAnsatzIsFlagged) {
  SolutionAnsatz a;
  a.bindings = {{"u3", RatFunc("0"_mp)}, {"u1", RatFunc("t"_mp)}, {"u0", RatFunc(MultiPoly())}};
  const auto r = residual(lookup_system("dkdv3"), a);
  EXPECT_TRUE(r[0].is_zero());
  EXPECT_EQ(r[1], "1"_mp);
  EXPECT_TRUE(r[2].is_zero());
  EXPECT_FALSE(all_zero(r));
}

TEST(Residual, UnboundUnknownIsAnError) {
  SolutionAnsatz a;
  a.bindings = {{"u3", RatFunc("0"_mp)}};
  EXPECT_THROW(residual(lookup_system("dkdv3"), a), DeformationError);
  EXPECT_THROW(residual(lookup_system("ellipse-eccentricity"), a), DeformationError);
}

TEST(Residual, QuadricConstrainedBenneyPreset) {
  SolutionAnsatz a;
  a.bindings = {{"d", RatFunc("t"_mp)},
                {"h", RatFunc("x2 + t^2/2"_mp)},
                {"delta", RatFunc(MultiPoly())},
                {"nu", RatFunc("x1 + x2"_mp)}};
  a.constants = {{"alpha", 0}, {"beta", Rational(1, 2)}};
  EXPECT_TRUE(all_zero(residual(lookup_system("quadric-constrained"), a)));
  // Without constants the residual keeps alpha and beta symbolic.
  a.constants.clear();
  EXPECT_FALSE(all_zero(residual(lookup_system("quadric-constrained"), a)));
}

TEST(Residual, DkpAndDvnSimpleSolutions) {
  SolutionAnsatz k;
  k.bindings = {{"h", RatFunc("x2"_mp)}, {"a10", RatFunc("-3/4*x1"_mp)}};
  EXPECT_TRUE(all_zero(residual(lookup_system("dkp"), k)));

  // Circle with constant radius: a8 = a9 = 0.
  SolutionAnsatz v;
  v.bindings = {{"h", RatFunc("-1"_mp)}, {"a8", RatFunc(MultiPoly())}, {"a9", RatFunc(MultiPoly())}};
  EXPECT_TRUE(all_zero(residual(lookup_system("dvn"), v)));
}

TEST(Residual, Ellipse11MatchesUvForm) {
  // u = a/b, v = b^2 with b = 1 and a = t gives the Hirota-Satsuma data only
  // when v is constant; check the (a, b) system on a = t + 3x... simple case.
  SolutionAnsatz a;
  a.bindings = {{"a", RatFunc("-x + t"_mp)}, {"b", RatFunc("1"_mp)}, {"a8", RatFunc("1"_mp)}};
  EXPECT_TRUE(all_zero(residual(lookup_system("ellipse-11"), a)));
}

TEST(SolutionFamily, SpecExamples) {
  auto a = solution_family("kdv3-linear", {{"a", 0}, {"b", 0}, {"c", 0}, {"d", MultiPoly(Rational(1, 2))}});
  EXPECT_TRUE(bound(a, "u3").is_zero());
  EXPECT_EQ(bound(a, "u1"), "t"_mp);
  EXPECT_EQ(bound(a, "u0"), "x"_mp);

  a = solution_family("kdv3-quadratic", {{"A", 1}, {"B", 1}, {"C", 1}, {"D", -1}, {"E", -1}});
  EXPECT_EQ(bound(a, "u3"), "2 - 2*t"_mp);
  EXPECT_EQ(bound(a, "u1"), "-t^2 - 2*t - 2*x + 3"_mp);
  EXPECT_EQ(bound(a, "u0"), "-2*t^2 + 4*t - 4*x + 4"_mp);

  a = symbolic("bh-rational");
  EXPECT_EQ(a.bindings.at("u").numerator(), "y0 - y"_mp);
  EXPECT_EQ(a.bindings.at("u").denominator(), "3*x"_mp);

  EXPECT_THROW(solution_family("nope", {}), DeformationError);
  EXPECT_THROW(solution_family("kdv3-linear", {{"a", 1}}), DeformationError);
}

TEST(Liouville, CubicFamily) {
  const auto a = symbolic("kdv3-linear");
  const MultiPoly u3 = bound(a, "u3"), u1 = bound(a, "u1"), u0 = bound(a, "u0");
  const MultiPoly f = "p^2"_mp - CubicCurve{u3, u1, u0}.family().polynomial();
  const HamiltonianSpec spec{RatFunc((scale(u3, Rational(1, 2)) - "z"_mp) * "p"_mp),
                             RatFunc(-differentiate(u3, "x"))};
  EXPECT_TRUE(liouville_residual(f, spec).is_zero());

  const auto q = symbolic("kdv3-quadratic");
  const MultiPoly v3 = bound(q, "u3");
  const MultiPoly g = "p^2"_mp - CubicCurve{v3, bound(q, "u1"), bound(q, "u0")}.family().polynomial();
  EXPECT_TRUE(liouville_residual(g, {RatFunc((scale(v3, Rational(1, 2)) - "z"_mp) * "p"_mp),
                                     RatFunc(-differentiate(v3, "x"))})
                  .is_zero());
}

TEST(Liouville, QuinticFamily) {
  const auto a = symbolic("kdv5-linear");
  const QuinticCurve qc{bound(a, "u0"), bound(a, "u1"), bound(a, "u2"), bound(a, "u3"), bound(a, "u4")};
  const MultiPoly f = qc.family().implicit();
  const MultiPoly u4 = bound(a, "u4");
  const HamiltonianSpec spec{RatFunc((scale(u4, Rational(1, 2)) - "z"_mp) * "p"_mp),
                             RatFunc(-differentiate(u4, "x"))};
  EXPECT_TRUE(liouville_residual(f, spec).is_zero());
}

TEST(Liouville, TrivialAndErrors) {
  EXPECT_TRUE(liouville_residual("p1^2 + x2*p2"_mp, HamiltonianSpec{}).is_zero());
  EXPECT_FALSE(liouville_residual("p^2 - t"_mp, HamiltonianSpec{}).is_zero());
  EXPECT_THROW(liouville_residual("p^2 + p1"_mp, HamiltonianSpec{}), DeformationError);
}

TEST(Liouville, BenneyHyperbola) {
  const MultiPoly f = "p1*p2 + t*p1 + x2 + t^2/2"_mp;
  const HamiltonianSpec spec{RatFunc("p2^2/2 + x1 + x2"_mp), RatFunc(MultiPoly())};
  EXPECT_TRUE(liouville_residual(f, spec).is_zero());
}

TEST(Liouville, EllipseCyclicReduction) {
  // f = p1^2/a^2 + p2^2/b^2 - 1 with u = a/b = t, v = b^2 = (t^2 - 2 x1)/3,
  // H = (b/a)^3 p1^3 + a8 p1 with a8 = u, alpha = A p1^2 (B = C = 0).
  const MultiPoly v = "(t^2 - 2*x1)/3"_mp;
  const RatFunc f = RatFunc("p1^2"_mp, "t^2"_mp * v) + RatFunc("p2^2"_mp, v) - RatFunc(1);
  const RatFunc H = RatFunc("p1^3"_mp, "t^3"_mp) + RatFunc("t*p1"_mp);
  // A = -2 (a1)_x1 - 6 a1 a_x1 / a with a1 = 1/t^3 and a_x1/a = v_x1/(2v).
  const RatFunc A = RatFunc(MultiPoly(-3), "t^3"_mp) * RatFunc(differentiate(v, "x1"), v);
  const HamiltonianSpec spec{H, A * RatFunc("p1^2"_mp)};
  EXPECT_TRUE(liouville_residual(f, spec).is_zero());
  // Dropping alpha leaves a nonzero residual.
  EXPECT_FALSE(liouville_residual(f, HamiltonianSpec{H, RatFunc()}).is_zero());
}

TEST(Liouville, LinearInF) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  const HamiltonianSpec spec{RatFunc("(1 - z)*p + x*t"_mp), RatFunc("t - x"_mp)};
  for (int i = 0; i < 100; ++i) {
    const MultiPoly f1 = MultiPoly(c(rng)) * "p^2"_mp + MultiPoly(c(rng)) * "x*z"_mp + MultiPoly(c(rng)) * "t*p"_mp;
    const MultiPoly f2 = MultiPoly(c(rng)) * "p*x"_mp + MultiPoly(c(rng)) * "z^3"_mp + MultiPoly(c(rng));
    EXPECT_EQ(liouville_residual(f1 + f2, spec), liouville_residual(f1, spec) + liouville_residual(f2, spec));
  }
}

TEST(Hodograph, SpecExamples) {
  auto r = hodograph_residual("(u^2 - 3*v)/2"_mp, "u"_mp, "u"_mp);
  EXPECT_TRUE(all_zero(r.residuals));
  EXPECT_FALSE(r.degenerate_jacobian);

  r = hodograph_residual("5*(u + v)"_mp, "u + v"_mp, "5"_mp);
  EXPECT_TRUE(r.residuals[0].is_zero());

  r = hodograph_residual("7"_mp, MultiPoly(), "u"_mp);
  EXPECT_TRUE(all_zero(r.residuals));
  EXPECT_TRUE(r.degenerate_jacobian);
}

TEST(Hodograph, InverseOfHirotaSatsuma) {
  // Forward map: u = t, v = -2x/3 + t^2/3. The inverse composed with it is
  // the identity.
  const MultiPoly x_of = "(u^2 - 3*v)/2"_mp, t_of = "u"_mp;
  const auto hs = symbolic("hirota-satsuma");
  const MultiPoly back_x = substitute(x_of, std::map<std::string, MultiPoly>{{"u", bound(hs, "u")}, {"v", bound(hs, "v")}});
  EXPECT_EQ(back_x, "x"_mp);
  EXPECT_EQ(substitute(t_of, std::map<std::string, MultiPoly>{{"u", bound(hs, "u")}}), "t"_mp);
}

TEST(Eccentricity, Transform) {
  EXPECT_DOUBLE_EQ(eccentricity_transform(1, 2)[0], 0.0);
  EXPECT_NEAR(eccentricity_transform(0.6, 2)[0], 0.8, 1e-15);
  EXPECT_EQ(eccentricity_transform(0.6, 2)[1], 2.0);
  EXPECT_THROW(eccentricity_transform(1.5, 0), DeformationError);
  EXPECT_THROW(eccentricity_transform(-2, 0), DeformationError);
}

TEST(Eccentricity, FiniteDifferenceResidualIsSecondOrder) {
  // Hirota-Satsuma: u = t, v = (t^2 - 2x)/3, a8 = u, restricted to u in (0, 1).
  const EccentricityState hs = [](double x, double t) {
    const auto ev = eccentricity_transform(t, (t * t - 2 * x) / 3);
    return std::array<double, 3>{ev[0], ev[1], t};
  };
  for (double t : {0.3, 0.5, 0.8}) {
    double prev = 0;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
      const auto r = eccentricity_residual_fd(hs, 0.7, t, h);
      const double err = std::abs(r[0]) + std::abs(r[1]);
      if (prev > 0) EXPECT_GT(prev / err, 3.5) << "t=" << t << " h=" << h;
      prev = err;
    }
  }
}

TEST(Characteristics, HamiltonianIndependentOfX) {
  const HamiltonianSpec spec{RatFunc("p1^2/2 + p2^2/2"_mp), RatFunc()};
  const auto tr = integrate_characteristics(spec, RatFunc("p1^2 + p2^2 - 1"_mp), {0.6, 0.8, 0, 0}, 0, 1, 0.1);
  for (const auto& s : tr.state) {
    EXPECT_DOUBLE_EQ(s[0], 0.6);
    EXPECT_DOUBLE_EQ(s[1], 0.8);
  }
  EXPECT_NEAR(tr.state.back()[2], 0.6, 1e-12);
  EXPECT_NEAR(tr.t.back(), 1.0, 1e-15);
}

TEST(Characteristics, TrivialCubicStaysOnCurve) {
  // H = -z p on p^2 = z^3 + t z + x, z = 0.5 held fixed.
  const HamiltonianSpec spec{RatFunc("-z*p"_mp), RatFunc()};
  const RatFunc f("p^2 - z^3 - t*z - x"_mp);
  const double z = 0.5, t0 = 0.0, x0 = 1.0;
  const double p0 = std::sqrt(z * z * z + t0 * z + x0);
  const auto tr = integrate_characteristics(spec, f, {p0, 0, x0, 0}, t0, t0 + 1, 1e-3, {{"z", z}});
  EXPECT_LE(tr.max_abs_f, 1e-8);
}

TEST(Characteristics, FourthOrderOnEllipse) {
  const MultiPoly v = "(t^2 - 2*x1)/3"_mp;
  const RatFunc f = RatFunc("p1^2"_mp, "t^2"_mp * v) + RatFunc("p2^2"_mp, v) - RatFunc(1);
  const HamiltonianSpec spec{RatFunc("p1^3"_mp, "t^3"_mp) + RatFunc("t*p1"_mp), RatFunc()};
  double prev = 0;
  for (double h : {0.1, 0.05, 0.025}) {
    const auto tr = integrate_characteristics(spec, f, {0.6, 0.8, -1, 0}, 1, 2, h);
    if (prev > 0) EXPECT_GE(prev / tr.max_abs_f, 12.0) << h;
    prev = tr.max_abs_f;
  }
}

TEST(Characteristics, Errors) {
  const HamiltonianSpec spec{RatFunc("p1^2"_mp), RatFunc()};
  const RatFunc f("p1"_mp);
  EXPECT_THROW(integrate_characteristics(spec, f, {1, 0, 0, 0}, 0, 1, 0), DeformationError);
  EXPECT_THROW(integrate_characteristics(spec, f, {1, 0, 0, 0}, 0, 1, -1), DeformationError);
  // dp/dt = p^2 blows up at t = 1 from p(0) = 1.
  const HamiltonianSpec blow{RatFunc("-p1^2*x1"_mp), RatFunc()};
  try {
    integrate_characteristics(blow, f, {1, 0, 0, 0}, 0, 5, 0.01);
    FAIL() << "expected blow-up";
  } catch (const CharacteristicBlowUp& e) {
    EXPECT_GT(e.last_good_t(), 0.5);
    EXPECT_LT(e.last_good_t(), 1.5);
  }
}
