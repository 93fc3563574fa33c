#pragma once

#include <json.hpp>

#include "hamcurve/deformations.hpp"
#include "hamcurve/topology.hpp"

namespace hamcurve::cli {

using Json = nlohmann::ordered_json;

// Doubles go through nlohmann's shortest round-trip formatting; NaN becomes
// null.
Json to_json(const SingularPoint& s);
Json to_json(const RealSectionReport& r);
Json to_json(const TransitionEvent& e);
Json to_json(const CriticalPoint& c);
Json to_json(const Window& w);
Json to_json(const HyperellipticFamily& f);

}  // namespace hamcurve::cli
