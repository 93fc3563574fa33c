#pragma once

#include <string>
#include <vector>

#include "hamcurve/curves.hpp"
#include "hamcurve/deformations.hpp"
#include "hamcurve/render.hpp"

namespace hamcurve::cli {

/// A named curve family p^2 = P(z) with coefficients in its parameters.
struct CurvePreset {
  std::string name;
  std::string description;
  HyperellipticFamily family;
  std::vector<std::string> params;
  /// Values bound when the preset fixes some parameters (Burgers-Hopf x = 1/3).
  std::vector<std::pair<std::string, Rational>> fixed;
};

const std::vector<CurvePreset>& curve_presets();
/// Throws std::invalid_argument for unknown names.
const CurvePreset& lookup_curve(const std::string& name);

/// A figure is either a row of frames or a phase diagram.
struct FigurePreset {
  std::string name;
  std::string description;
  std::vector<FrameSpec> frames;
  /// Phase diagrams: curve preset and (x, t) window.
  std::string phase_curve;
  Window phase_window;

  bool is_phase() const { return !phase_curve.empty(); }
};

const std::vector<FigurePreset>& figure_presets();
const FigurePreset& lookup_figure(const std::string& name);

struct CharacteristicsPreset {
  std::string name;
  std::string description;
  HamiltonianSpec spec;
  RatFunc f;
  PhasePoint start{};
  double t0 = 0, t1 = 1, step = 0.01;
  std::map<std::string, double> params;
};

const std::vector<CharacteristicsPreset>& characteristics_presets();
const CharacteristicsPreset& lookup_characteristics(const std::string& name);

}  // namespace hamcurve::cli
