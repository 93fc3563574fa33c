#include "hamcurve/deformations.hpp"

#include <algorithm>
#include <cmath>

namespace hamcurve {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<HydroSystem> build_catalog() {
  std::vector<HydroSystem> c;

  c.push_back({"quadric-constrained",
               "hyperbola p1 p2 + d p1 + h = 0 under H = alpha p1^2 + beta p2^2 + delta p1 + nu",
               {"d", "h", "delta", "nu"},
               {"x1", "x2", "t"},
               {"alpha", "beta"},
               {"d_t + delta*d_x1 - 2*beta*d*d_x2 + 2*alpha*h_x1 - nu_x2",
                "h_t + h_x1*delta + h*delta_x1 - 2*beta*(d_x2*h + d*h_x2)",
                "delta_x2 - 2*alpha*d_x1",
                "nu_x1 - 2*beta*h_x2"}});

  c.push_back({"benney-2p1",
               "(2+1)-dimensional one-layer Benney system",
               {"d", "h"},
               {"x1", "x2", "t"},
               {},
               {"d_x1_t - d_x1*d_x2 - d*d_x1_x2 - h_x2_x2", "h_t - d_x2*h - d*h_x2"}});

  c.push_back({"dkp",
               "dispersionless KP, parabola p1^2 + p1 + h = 0",
               {"h", "a10"},
               {"x1", "x2", "t"},
               {},
               {"h_t + 3/2*h_x1*h - a10_x2", "3*h_x2 + 4*a10_x1"}});

  c.push_back({"dvn",
               "dispersionless Veselov-Novikov, circle p1^2 + p2^2 + h = 0",
               {"h", "a8", "a9"},
               {"x1", "x2", "t"},
               {},
               {"h_t + h_x1*a8 + h*a8_x1 + h_x2*a9 + h*a9_x2", "3*h_x1 - a8_x1 + a9_x2", "3*h_x2 + a8_x2 + a9_x1"}});

  c.push_back({"ellipse",
               "ellipse p1^2/a^2 + p2^2/b^2 - 1 = 0 under a cubic Hamiltonian",
               {"a", "b", "a1", "a2", "a8", "a9"},
               {"x1", "x2", "t"},
               {},
               {"a_t + a8_x1*a + a8*a_x1 + a1_x1*a^3 + 3*a1*a^2*a_x1 + a9*a_x2",
                "b_t + a9_x2*b + a9*b_x2 + a2_x2*b^3 + 3*a2*b^2*b_x2 + a8*b_x1",
                "a^4*a1_x2 - b^4*a2_x1",
                "a^4*a1_x2 + a^2*a8_x2 + b^2*a9_x1",
                "a*(a2_x2*b^3 + 3*a2*b^2*b_x2) + b*(a1_x1*a^3 + 3*a1*a^2*a_x1) - 3*a1*a^3*b_x1 - 3*a2*b^3*a_x2"}});

  c.push_back({"ellipse-11",
               "ellipse with cyclic x2",
               {"a", "b", "a8"},
               {"x", "t"},
               {},
               {"a_t + a8_x*a + a8*a_x + 3*b^2*b_x", "b_t + a8*b_x"}});

  c.push_back({"ellipse-uv",
               "ellipse with cyclic x2 in u = a/b, v = b^2",
               {"u", "v", "a8"},
               {"x", "t"},
               {},
               {"u_t + a8_x*u + a8*u_x + 3/2*v_x", "v_t + a8*v_x"}});

  HydroSystem ecc{"ellipse-eccentricity",
                  "ellipse in eccentricity form (numeric only)",
                  {"eps", "v", "a8"},
                  {"x", "t"},
                  {},
                  {"eps_t - sqrt(1-eps^2)/eps*(a8*sqrt(1-eps^2) + 3/2*v)_x", "v_t + a8*v_x"}};
  ecc.numeric_only = true;
  c.push_back(ecc);

  c.push_back({"hodograph-linear",
               "linear system for x(u, v), t(u, v)",
               {"x", "t", "a8"},
               {"u", "v"},
               {},
               {"x_u - a8*t_u", "x_v + (3/2 + u*a8_v)*t_u - (a8 + u*a8_u)*t_v"}});

  c.push_back({"dkdv3",
               "three-component dispersionless KdV",
               {"u3", "u1", "u0"},
               {"x", "t"},
               {},
               {"u3_t - u1_x + 3/2*u3*u3_x", "u1_t - u0_x + u1*u3_x + 1/2*u3*u1_x", "u0_t + u0*u3_x + 1/2*u3*u0_x"}});

  c.push_back({"burgers-hopf", "Burgers-Hopf u_x = 3 u u_y", {"u"}, {"x", "y"}, {}, {"u_x - 3*u*u_y"}});

  auto dkdv5 = [](const std::string& name, const std::string& coeff) {
    return HydroSystem{name,
                       "five-component dispersionless KdV, u4 coefficient " + coeff,
                       {"u4", "u3", "u2", "u1", "u0"},
                       {"x", "t"},
                       {},
                       {"u4_t - u3_x + " + coeff + "*u4_x*u4",
                        "u3_t - u2_x + 1/2*u3_x*u4 + u4_x*u3",
                        "u2_t - u1_x + 1/2*u2_x*u4 + u4_x*u2",
                        "u1_t - u0_x + 1/2*u1_x*u4 + u4_x*u1",
                        "u0_t + 1/2*u0_x*u4 + u4_x*u0"}};
  };
  c.push_back(dkdv5("dkdv5", "2/2"));
  c.push_back(dkdv5("dkdv5-alt", "3/2"));

  for (const auto& s : c) s.validate();
  return c;
}

struct FamilyDef {
  SolutionFamily info;
  std::vector<std::pair<std::string, std::string>> bindings;  // numerator texts
  std::vector<std::pair<std::string, std::string>> denominators;
};

const std::vector<FamilyDef>& family_defs() {
  static const std::vector<FamilyDef> defs = {
      {{"kdv3-linear", "dkdv3", {"a", "b", "c", "d"}},
       {{"u3", "2*a"}, {"u1", "a^2 + 2*b + 2*d*t"}, {"u0", "2*(a*b + c) + 2*d*x - 2*a*d*t"}},
       {}},
      {{"kdv3-quadratic", "dkdv3", {"A", "B", "C", "D", "E"}},
       {{"u3", "2*A + 2*E*t"},
        {"u1", "-E^2*t^2 + 2*D*t + 2*E*x + A^2 + 2*B"},
        {"u0", "-(A*E^2 + E*D)*t^2 - (2*A*D + 2*A^2*E)*t + 2*A*E*x + 2*D*x + 2*C + 2*A*B"}},
       {}},
      {{"kdv5-linear", "dkdv5", {"A0", "A1", "A2", "C0", "C1", "C2", "C3", "C4"}},
       {{"u4", "C4"},
        {"u3", "C3 + A2*t"},
        {"u2", "C2 + (A1 - 1/2*A2*C4)*t + A2*x"},
        {"u1", "C1 + (A0 - 1/2*A1*C4)*t + A1*x"},
        {"u0", "C0 - 1/2*A0*C4*t + A0*x"}},
       {}},
      {{"hirota-satsuma", "ellipse-uv", {}}, {{"u", "t"}, {"v", "-2/3*x + 1/3*t^2"}, {"a8", "t"}}, {}},
      {{"bh-rational", "burgers-hopf", {"y0"}}, {{"u", "y0 - y"}}, {{"u", "3*x"}}},
      {{"benney-simple", "benney-2p1", {}}, {{"d", "t"}, {"h", "x2 + t^2/2"}}, {}},
  };
  return defs;
}

const FamilyDef& find_family(const std::string& name) {
  for (const auto& f : family_defs())
    if (f.info.name == name) return f;
  throw DeformationError("unknown solution family '" + name + "'");
}

}  // namespace

bool parse_derivative(const std::string& symbol, const std::vector<std::string>& fields,
                      const std::vector<std::string>& independents, std::string& field,
                      std::vector<std::string>& by) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = symbol.find('_', start);
    parts.push_back(symbol.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() < 2 || !contains(fields, parts[0])) return false;
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (!contains(independents, parts[i])) return false;
  field = parts[0];
  by.assign(parts.begin() + 1, parts.end());
  return true;
}

std::vector<MultiPoly> HydroSystem::residuals() const {
  if (numeric_only) return {};
  std::vector<MultiPoly> out;
  out.reserve(residual_texts.size());
  for (const auto& text : residual_texts) out.push_back(MultiPoly::parse(text));
  return out;
}

void HydroSystem::validate() const {
  if (numeric_only) return;
  std::string field;
  std::vector<std::string> by;
  for (const auto& r : residuals()) {
    for (const auto& v : r.variables()) {
      if (contains(fields, v) || contains(independents, v) || contains(constants, v)) continue;
      if (parse_derivative(v, fields, independents, field, by)) continue;
      throw DeformationError("system '" + name + "': undeclared symbol '" + v + "'");
    }
  }
}

const std::vector<HydroSystem>& system_catalog() {
  static const std::vector<HydroSystem> catalog = build_catalog();
  return catalog;
}

const HydroSystem& lookup_system(const std::string& name) {
  for (const auto& s : system_catalog())
    if (s.name == name) return s;
  throw DeformationError("unknown system '" + name + "'");
}

std::vector<MultiPoly> residual(const HydroSystem& system, const SolutionAnsatz& ansatz) {
  if (system.numeric_only)
    throw DeformationError("system '" + system.name + "' is numeric-only and has no symbolic residual");
  for (const auto& f : system.fields)
    if (!ansatz.bindings.count(f)) throw DeformationError("unbound unknown '" + f + "'");

  std::map<std::string, RatFunc> derived;
  std::string field;
  std::vector<std::string> by;
  std::vector<MultiPoly> out;
  for (const auto& r : system.residuals()) {
    std::map<std::string, RatFunc> subs;
    for (const auto& v : r.variables()) {
      if (auto it = ansatz.bindings.find(v); it != ansatz.bindings.end() && contains(system.fields, v)) {
        subs.emplace(v, it->second);
      } else if (auto c = ansatz.constants.find(v); c != ansatz.constants.end() && contains(system.constants, v)) {
        subs.emplace(v, RatFunc(MultiPoly(c->second)));
      } else if (parse_derivative(v, system.fields, system.independents, field, by)) {
        auto d = derived.find(v);
        if (d == derived.end()) {
          RatFunc value = ansatz.bindings.at(field);
          for (const auto& w : by) value = differentiate(value, w);
          d = derived.emplace(v, value).first;
        }
        subs.emplace(v, d->second);
      }
    }
    out.push_back(substitute(r, subs).numerator());
  }
  return out;
}

bool all_zero(const std::vector<MultiPoly>& residuals) {
  return std::all_of(residuals.begin(), residuals.end(), [](const MultiPoly& r) { return r.is_zero(); });
}

const std::vector<SolutionFamily>& solution_families() {
  static const std::vector<SolutionFamily> list = [] {
    std::vector<SolutionFamily> v;
    for (const auto& f : family_defs()) v.push_back(f.info);
    return v;
  }();
  return list;
}

const SolutionFamily& lookup_family(const std::string& name) { return find_family(name).info; }

SolutionAnsatz solution_family(const std::string& name, const std::map<std::string, MultiPoly>& constants) {
  const FamilyDef& def = find_family(name);
  std::map<std::string, MultiPoly> subs;
  for (const auto& c : def.info.constants) {
    auto it = constants.find(c);
    if (it == constants.end()) throw DeformationError("family '" + name + "': missing constant '" + c + "'");
    subs.emplace(c, it->second);
  }
  SolutionAnsatz out;
  for (const auto& [field, text] : def.bindings) {
    MultiPoly num = substitute(MultiPoly::parse(text), subs);
    MultiPoly den(1);
    for (const auto& [f, d] : def.denominators)
      if (f == field) den = substitute(MultiPoly::parse(d), subs);
    out.bindings.emplace(field, RatFunc(std::move(num), std::move(den)));
  }
  return out;
}

std::map<std::string, MultiPoly> symbolic_constants(const std::string& family) {
  std::map<std::string, MultiPoly> out;
  for (const auto& c : lookup_family(family).constants) out.emplace(c, MultiPoly::variable(c));
  return out;
}

Frame detect_frame(const RatFunc& f, const HamiltonianSpec& spec) {
  bool plane = false;
  bool reduced = false;
  for (const MultiPoly* p : {&f.numerator(), &f.denominator(), &spec.H.numerator(), &spec.H.denominator(),
                             &spec.alpha.numerator(), &spec.alpha.denominator()}) {
    for (const auto& v : p->variables()) {
      if (v == "p1" || v == "p2" || v == "x1" || v == "x2") plane = true;
      if (v == "p" || v == "x") reduced = true;
    }
  }
  if (plane && reduced) throw DeformationError("mismatched variable frames: (p1, p2, x1, x2) mixed with (p, x)");
  return plane ? Frame::plane : reduced ? Frame::reduced : Frame::none;
}

RatFunc poisson_bracket(const RatFunc& f, const RatFunc& h, Frame frame) {
  static const std::vector<std::pair<std::string, std::string>> plane = {{"p1", "x1"}, {"p2", "x2"}};
  static const std::vector<std::pair<std::string, std::string>> reduced = {{"p", "x"}};
  if (frame == Frame::none) return {};
  RatFunc out;
  for (const auto& [p, x] : frame == Frame::plane ? plane : reduced)
    out = out + differentiate(f, x) * differentiate(h, p) - differentiate(f, p) * differentiate(h, x);
  return out;
}

RatFunc liouville_residual(const RatFunc& f, const HamiltonianSpec& spec) {
  const Frame frame = detect_frame(f, spec);
  return differentiate(f, "t") + poisson_bracket(f, spec.H, frame) - spec.alpha * f;
}

MultiPoly liouville_residual(const MultiPoly& f, const HamiltonianSpec& spec) {
  return liouville_residual(RatFunc(f), spec).numerator();
}

HodographResult hodograph_residual(const MultiPoly& x_of, const MultiPoly& t_of, const MultiPoly& alpha8) {
  const MultiPoly x_u = differentiate(x_of, "u"), x_v = differentiate(x_of, "v");
  const MultiPoly t_u = differentiate(t_of, "u"), t_v = differentiate(t_of, "v");
  const MultiPoly a_u = differentiate(alpha8, "u"), a_v = differentiate(alpha8, "v");
  const MultiPoly u = MultiPoly::variable("u");
  HodographResult out;
  out.residuals.push_back(x_u - alpha8 * t_u);
  out.residuals.push_back(x_v + (MultiPoly(Rational(3, 2)) + u * a_v) * t_u - (alpha8 + u * a_u) * t_v);
  out.degenerate_jacobian = (x_u * t_v - x_v * t_u).is_zero();
  return out;
}

std::array<double, 2> eccentricity_transform(double u, double v) {
  if (!std::isfinite(u) || std::abs(u) > 1) throw DeformationError("eccentricity undefined for |u| > 1");
  if (u <= 0) throw DeformationError("eccentricity transform requires 0 < u");
  return {std::sqrt(1 - u * u), v};
}

std::array<double, 2> eccentricity_residual_fd(const EccentricityState& state, double x, double t, double h) {
  if (!(h > 0)) throw DeformationError("finite-difference spacing must be positive");
  auto flux = [&](double xx, double tt) {
    const auto s = state(xx, tt);
    return s[2] * std::sqrt(1 - s[0] * s[0]) + 1.5 * s[1];
  };
  const auto c = state(x, t);
  const auto tp = state(x, t + h), tm = state(x, t - h);
  const auto xp = state(x + h, t), xm = state(x - h, t);
  const double eps_t = (tp[0] - tm[0]) / (2 * h);
  const double flux_x = (flux(x + h, t) - flux(x - h, t)) / (2 * h);
  const double v_t = (tp[1] - tm[1]) / (2 * h);
  const double v_x = (xp[1] - xm[1]) / (2 * h);
  return {eps_t - std::sqrt(1 - c[0] * c[0]) / c[0] * flux_x, v_t + c[2] * v_x};
}

Trajectory integrate_characteristics(const HamiltonianSpec& spec, const RatFunc& f, const PhasePoint& start, double t0,
                                     double t1, double step, const std::map<std::string, double>& params) {
  if (!(step > 0) || !std::isfinite(step)) throw DeformationError("integration step must be positive");
  if (!std::isfinite(t0) || !std::isfinite(t1) || t1 < t0) throw DeformationError("integration needs t0 <= t1");

  const Frame frame = detect_frame(f, spec);
  const std::array<std::string, 4> names =
      frame == Frame::reduced ? std::array<std::string, 4>{"p", "", "x", ""}
                              : std::array<std::string, 4>{"p1", "p2", "x1", "x2"};

  // d(p1, p2, x1, x2)/dt = (-H_x1, -H_x2, H_p1, H_p2).
  std::array<RatFunc, 4> rhs;
  if (frame != Frame::none) {
    for (int i = 0; i < 2; ++i) {
      const std::string& p = names[static_cast<std::size_t>(i)];
      const std::string& x = names[static_cast<std::size_t>(i + 2)];
      if (p.empty()) continue;
      rhs[static_cast<std::size_t>(i)] = -differentiate(spec.H, x);
      rhs[static_cast<std::size_t>(i + 2)] = differentiate(spec.H, p);
    }
  }

  std::map<std::string, double> env = params;
  auto bind = [&](double t, const PhasePoint& s) {
    env["t"] = t;
    for (std::size_t i = 0; i < 4; ++i)
      if (!names[i].empty()) env[names[i]] = s[i];
  };
  auto deriv = [&](double t, const PhasePoint& s) {
    bind(t, s);
    PhasePoint d{};
    for (std::size_t i = 0; i < 4; ++i) d[i] = rhs[i].is_zero() ? 0.0 : rhs[i].eval(env);
    return d;
  };
  auto f_at = [&](double t, const PhasePoint& s) {
    bind(t, s);
    return f.eval(env);
  };
  auto axpy = [](const PhasePoint& s, double a, const PhasePoint& k) {
    PhasePoint r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = s[i] + a * k[i];
    return r;
  };

  Trajectory out;
  PhasePoint s = start;
  double t = t0;
  out.t.push_back(t);
  out.state.push_back(s);
  out.f.push_back(f_at(t, s));

  const auto steps = static_cast<long>(std::ceil((t1 - t0) / step - 1e-9));
  for (long k = 0; k < steps; ++k) {
    const double t_next = k + 1 == steps ? t1 : t0 + static_cast<double>(k + 1) * step;
    const double h = t_next - t;
    const PhasePoint k1 = deriv(t, s);
    const PhasePoint k2 = deriv(t + h / 2, axpy(s, h / 2, k1));
    const PhasePoint k3 = deriv(t + h / 2, axpy(s, h / 2, k2));
    const PhasePoint k4 = deriv(t + h, axpy(s, h, k3));
    PhasePoint next;
    for (std::size_t i = 0; i < 4; ++i) next[i] = s[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    const double fv = f_at(t_next, next);
    if (!std::all_of(next.begin(), next.end(), [](double v) { return std::isfinite(v); }) || !std::isfinite(fv))
      throw CharacteristicBlowUp("characteristic blow-up after t = " + std::to_string(t), t);
    s = next;
    t = t_next;
    out.t.push_back(t);
    out.state.push_back(s);
    out.f.push_back(fv);
  }
  for (double v : out.f) out.max_abs_f = std::max(out.max_abs_f, std::abs(v));
  out.error_constant = out.max_abs_f / std::pow(step, 4);
  return out;
}

HamiltonianSpec hyperelliptic_hamiltonian(const HyperellipticFamily& family) {
  const MultiPoly& top = family.coefficient(family.degree() - 1);
  return {RatFunc((scale(top, Rational(1, 2)) - MultiPoly::variable("z")) * MultiPoly::variable("p")),
          RatFunc(-differentiate(top, "x"))};
}

}  // namespace hamcurve
