#include "hamcurve_cli/presets.hpp"

#include <stdexcept>

namespace hamcurve::cli {

namespace {

MultiPoly mp(const char* s) { return MultiPoly::parse(s); }
Rational q(const char* s) { return parse_rational(s); }

template <class T>
const T& find_named(const std::vector<T>& all, const std::string& name, const char* what) {
  for (const auto& p : all)
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : all) known += (known.empty() ? "" : ", ") + p.name;
  throw std::invalid_argument(std::string("unknown ") + what + " '" + name + "' (known: " + known + ")");
}

FrameSpec slice(const CurvePreset& c, std::vector<std::pair<std::string, Rational>> params, Window w) {
  FrameSpec f;
  f.family = c.family;
  for (const auto& fx : c.fixed) params.push_back(fx);
  f.params = std::move(params);
  f.window = w;
  return f;
}

std::vector<FrameSpec> xt_row(const std::string& curve, const char* x, std::initializer_list<const char*> ts,
                              Window w) {
  std::vector<FrameSpec> out;
  for (const char* t : ts) out.push_back(slice(lookup_curve(curve), {{"x", q(x)}, {"t", q(t)}}, w));
  return out;
}

FrameSpec plane(const char* f, const char* a, const char* av, const char* tv, Window w) {
  FrameSpec s;
  s.implicit = mp(f);
  s.h_var = "p1";
  s.v_var = "p2";
  s.params = {{a, q(av)}, {"t", q(tv)}};
  s.window = w;
  return s;
}

}  // namespace

const std::vector<CurvePreset>& curve_presets() {
  static const std::vector<CurvePreset> all = [] {
    std::vector<CurvePreset> c;
    c.push_back({"trivial-cubic", "p^2 = z^3 + t z + x", HyperellipticFamily({mp("x"), mp("t"), mp("0")}),
                 {"x", "t"}, {}});
    c.push_back({"linear-cubic", "linear cubic solution with a = b = c = -d = 1: u3 = 2, u1 = 3 - 2t, u0 = 4 + 2t - 2x",
                 HyperellipticFamily({mp("4 + 2*t - 2*x"), mp("3 - 2*t"), mp("2")}), {"x", "t"}, {}});
    c.push_back({"quadratic-cubic", "quadratic cubic solution with A = B = C = -D = -E = 1",
                 HyperellipticFamily({mp("-2*t^2 + 4*t - 4*x + 4"), mp("-t^2 - 2*t - 2*x + 3"), mp("2 - 2*t")}),
                 {"x", "t"}, {}});
    c.push_back({"quintic-linear", "linear quintic solution with A0 = A1 = A2 = C4 = 1, C0 = -12, C1 = C2 = 0, C3 = 3",
                 HyperellipticFamily({mp("-t/2 + x - 12"), mp("t/2 + x"), mp("t/2 + x"), mp("t + 3"), mp("1")}),
                 {"x", "t"}, {}});
    c.push_back({"burgers-hopf",
                 "p^2 = (z + 2u)(z - u)^2 with u = (y0 - y)/(3x) at x = 1/3, y0 = 1 (so u = 1 - y)",
                 HyperellipticFamily({mp("2*(1 - y)^3"), mp("-3*(1 - y)^2"), mp("0")}), {"y"}, {{"x", q("1/3")}}});
    return c;
  }();
  return all;
}

const CurvePreset& lookup_curve(const std::string& name) { return find_named(curve_presets(), name, "curve"); }

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> all = [] {
    const Window small{-2, 2, -2.5, 2.5}, wide{-4, 4, -5, 5};
    std::vector<FigurePreset> f;
    const char* hyperbola = "p1*p2 + t*p1 + x2 + t^2/2";
    f.push_back({"fig1", "hyperbola deformation d = t, h = x2 + t^2/2",
                 {plane(hyperbola, "x2", "-1", "1.3", wide), plane(hyperbola, "x2", "-1", "1.4142", wide),
                  plane(hyperbola, "x2", "-1", "1.6", wide)},
                 "",
                 {}});
    // p1^2/a^2 + p2^2/b^2 = 1 with a^2 = u^2 v, b^2 = v, u = t, v = (t^2 - 2 x1)/3, times a^2.
    const char* ellipse = "p1^2 + t^2*p2^2 - t^2*(t^2 - 2*x1)/3";
    f.push_back({"fig2", "circle (t = 1) deforming into an ellipse, Hirota-Satsuma solution",
                 {plane(ellipse, "x1", "-1", "1", small), plane(ellipse, "x1", "-1", "1.2", small),
                  plane(ellipse, "x1", "-1", "1.6", small)},
                 "",
                 {}});
    f.push_back({"fig3", "phase diagram of the trivial cubic", {}, "trivial-cubic", {-1, 1, -2, 1}});
    f.push_back({"fig4", "trivial cubic along x = 0.2: node", xt_row("trivial-cubic", "0.2", {"-0.5", "-0.64633", "-1"}, small), "", {}});
    f.push_back({"fig5", "trivial cubic along x = -0.2: acnode", xt_row("trivial-cubic", "-0.2", {"-0.5", "-0.66", "-1"}, small), "", {}});
    f.push_back({"fig6", "trivial cubic along x = 0: cusp", xt_row("trivial-cubic", "0", {"0.5", "0", "-0.5"}, small), "", {}});
    f.push_back({"fig7", "phase diagram of the linear solution", {}, "linear-cubic", {-2, 12, -5, 10}});
    f.push_back({"fig8", "bubble forms, is absorbed and forms again along x = 4",
                 xt_row("linear-cubic", "4", {"-1", "1.5", "2.1", "5", "8.3", "10"}, wide), "", {}});
    f.push_back({"fig9", "phase diagram of the quadratic solution", {}, "quadratic-cubic", {-2, 16, -3, 6}});
    f.push_back({"fig10", "quintic two-bubble regime along x = 7",
                 xt_row("quintic-linear", "7", {"0", "-3.6", "-5", "-9", "-9.11", "-9.3", "-10.45", "-11.2", "-14"},
                        Window{-3, 3, -3.75, 3.75}),
                 "", {}});
    {
      std::vector<FrameSpec> bh;
      for (const char* y : {"1.5", "1", "0.5"}) bh.push_back(slice(lookup_curve("burgers-hopf"), {{"y", q(y)}}, small));
      f.push_back({"fig11", "Burgers-Hopf deformation of the singular cubic: acnode, cusp, node", bh, "", {}});
    }
    f.push_back({"quadratic-oscillation", "quadratic solution along x = 1.3",
                 xt_row("quadratic-cubic", "1.3",
                        {"-2", "-1.27", "-0.5", "0.2", "0.3", "0.3871", "0.65", "0.786", "1.5", "4.5", "5", "9.5"}, wide),
                 "", {}});
    return f;
  }();
  return all;
}

const FigurePreset& lookup_figure(const std::string& name) { return find_named(figure_presets(), name, "figure"); }

const std::vector<CharacteristicsPreset>& characteristics_presets() {
  static const std::vector<CharacteristicsPreset> all = [] {
    std::vector<CharacteristicsPreset> c;
    {
      CharacteristicsPreset e;
      e.name = "ellipse";
      e.description = "Hirota-Satsuma ellipse, H = p1^3/t^3 + t p1, from the circle at x1 = -1, t = 1";
      const MultiPoly v = mp("(t^2 - 2*x1)/3");
      e.f = RatFunc(mp("p1^2"), mp("t^2") * v) + RatFunc(mp("p2^2"), v) - RatFunc(1);
      e.spec = {RatFunc(mp("p1^3"), mp("t^3")) + RatFunc(mp("t*p1")), RatFunc()};
      e.start = {0.6, 0.8, -1, 0};
      e.t0 = 1;
      e.t1 = 2;
      e.step = 0.05;
      c.push_back(e);
    }
    {
      CharacteristicsPreset t;
      t.name = "trivial-cubic";
      t.description = "p^2 = z^3 + t z + x with H = -z p at z = 1, from (p, x) = (2, 2) at t = 1";
      t.f = RatFunc(mp("p^2 - z^3 - t*z - x"));
      t.spec = hyperelliptic_hamiltonian(lookup_curve("trivial-cubic").family);
      t.start = {2, 0, 2, 0};
      t.t0 = 1;
      t.t1 = 2;
      t.step = 0.01;
      t.params = {{"z", 1.0}};
      c.push_back(t);
    }
    return c;
  }();
  return all;
}

const CharacteristicsPreset& lookup_characteristics(const std::string& name) {
  return find_named(characteristics_presets(), name, "characteristics preset");
}

}  // namespace hamcurve::cli
