#pragma once

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamcurve/curves.hpp"
#include "hamcurve/multipoly.hpp"
#include "hamcurve/ratfunc.hpp"

namespace hamcurve {

class DeformationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hydrodynamic-type PDE system. Residuals are polynomials in the unknowns,
/// independents, declared constants and derivative symbols. A derivative is
/// written as the unknown followed by one "_<independent>" per
/// differentiation: "u3_x", "d_x1_t" (= d_{x1 t}).
struct HydroSystem {
  std::string name;
  std::string description;
  std::vector<std::string> fields;
  std::vector<std::string> independents;
  std::vector<std::string> constants;
  std::vector<std::string> residual_texts;
  /// Systems outside the polynomial ring (square roots) are only checked
  /// numerically; their residual list is empty.
  bool numeric_only = false;

  std::vector<MultiPoly> residuals() const;
  /// Throws DeformationError if a residual uses a symbol that is not an
  /// unknown, an independent, a declared constant or a derivative of an
  /// unknown with respect to independents.
  void validate() const;
};

/// Splits "u3_x_t" into ("u3", {"x", "t"}). Returns false when `symbol` is
/// not a derivative of one of `fields` by `independents`.
bool parse_derivative(const std::string& symbol, const std::vector<std::string>& fields,
                      const std::vector<std::string>& independents, std::string& field,
                      std::vector<std::string>& by);

const std::vector<HydroSystem>& system_catalog();
/// Throws DeformationError for unknown names.
const HydroSystem& lookup_system(const std::string& name);

struct SolutionAnsatz {
  std::map<std::string, RatFunc> bindings;
  /// Values for the system's declared constants; unset constants stay symbolic.
  std::map<std::string, Rational> constants;
};

/// Substitutes the ansatz into every residual. Rational bindings are cleared
/// by returning the numerator of each residual, so an all-zero list certifies
/// a solution. Throws DeformationError for unbound unknowns and for
/// numeric-only systems.
std::vector<MultiPoly> residual(const HydroSystem& system, const SolutionAnsatz& ansatz);

bool all_zero(const std::vector<MultiPoly>& residuals);

struct SolutionFamily {
  std::string name;
  std::string system;  // default target system
  std::vector<std::string> constants;
};

const std::vector<SolutionFamily>& solution_families();
/// Throws DeformationError for unknown names.
const SolutionFamily& lookup_family(const std::string& name);

/// Builds the named family. `constants` must supply every free parameter of
/// the family; pass MultiPoly::variable(name) to keep one symbolic. Throws
/// DeformationError for an unknown family or a missing constant.
SolutionAnsatz solution_family(const std::string& name, const std::map<std::string, MultiPoly>& constants);

/// Every free constant of the family bound to its own symbol.
std::map<std::string, MultiPoly> symbolic_constants(const std::string& family);

/// Hamiltonian H and Liouville multiplier alpha for
/// d_t f + {f, H} = alpha f.
struct HamiltonianSpec {
  RatFunc H;
  RatFunc alpha;
};

/// Hamiltonian of the reduced dKdV hierarchy for p^2 = z^n + u_{n-1} z^{n-1}
/// + ...: H = (u_{n-1}/2 - z) p with alpha = -d_x u_{n-1}.
HamiltonianSpec hyperelliptic_hamiltonian(const HyperellipticFamily& family);

/// The canonical pairs used by the bracket: (p1, x1), (p2, x2) in the plane
/// frame, or (p, x) with z as a parameter in the reduced frame.
enum class Frame { none, plane, reduced };

/// Determines the frame from the variables of f, H and alpha. Throws
/// DeformationError when both frames' variables occur.
Frame detect_frame(const RatFunc& f, const HamiltonianSpec& spec);

/// {f, H} = sum_i (f_{x_i} H_{p_i} - f_{p_i} H_{x_i}).
RatFunc poisson_bracket(const RatFunc& f, const RatFunc& h, Frame frame);

/// d_t f + {f, H} - alpha f; the numerator is zero iff the deformation is
/// Hamiltonian with this alpha.
RatFunc liouville_residual(const RatFunc& f, const HamiltonianSpec& spec);
MultiPoly liouville_residual(const MultiPoly& f, const HamiltonianSpec& spec);

struct HodographResult {
  std::vector<MultiPoly> residuals;
  /// The map (u, v) -> (x, t) has identically zero Jacobian.
  bool degenerate_jacobian = false;
};

/// x_u - a8 t_u and x_v + (3/2 + u a8_v) t_u - (a8 + u a8_u) t_v.
HodographResult hodograph_residual(const MultiPoly& x_of, const MultiPoly& t_of, const MultiPoly& alpha8);

/// epsilon = sqrt(1 - u^2); v passes through. Requires 0 < u <= 1.
std::array<double, 2> eccentricity_transform(double u, double v);

/// State (epsilon, v, alpha8) as a function of (x, t).
using EccentricityState = std::function<std::array<double, 3>(double x, double t)>;

/// Central-difference residuals of the eccentricity system at (x, t):
/// eps_t - sqrt(1-eps^2)/eps (a8 sqrt(1-eps^2) + 3/2 v)_x and v_t + a8 v_x.
std::array<double, 2> eccentricity_residual_fd(const EccentricityState& state, double x, double t, double h);

/// (p1, p2, x1, x2). In the reduced frame p1 holds p and x1 holds x.
using PhasePoint = std::array<double, 4>;

struct Trajectory {
  std::vector<double> t;
  std::vector<PhasePoint> state;
  std::vector<double> f;
  double max_abs_f = 0.0;
  /// max_abs_f / step^4.
  double error_constant = 0.0;
};

class CharacteristicBlowUp : public DeformationError {
 public:
  CharacteristicBlowUp(const std::string& what, double last_good_t)
      : DeformationError(what), last_good_t_(last_good_t) {}
  double last_good_t() const { return last_good_t_; }

 private:
  double last_good_t_;
};

/// Classical RK4 with fixed step on dp_i/dt = -H_{x_i}, dx_i/dt = H_{p_i}.
/// Variables other than the canonical pairs and t are taken from `params`.
/// The last step is shortened to land on t1.
Trajectory integrate_characteristics(const HamiltonianSpec& spec, const RatFunc& f, const PhasePoint& start, double t0,
                                     double t1, double step, const std::map<std::string, double>& params = {});

}  // namespace hamcurve
