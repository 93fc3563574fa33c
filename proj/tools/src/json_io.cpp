#include "hamcurve_cli/json_io.hpp"

namespace hamcurve::cli {

Json to_json(const SingularPoint& s) {
  return Json{{"z", s.z}, {"kind", to_string(s.kind)}, {"multiplicity", s.multiplicity}};
}

Json to_json(const RealSectionReport& r) {
  Json j;
  j["oval_intervals"] = Json::array();
  for (const auto& iv : r.oval_intervals) j["oval_intervals"].push_back({iv[0], iv[1]});
  j["unbounded_branch_start"] = r.unbounded_branch_start ? Json(*r.unbounded_branch_start) : Json(nullptr);
  j["isolated_points"] = r.isolated_points;
  j["singular_points"] = Json::array();
  for (const auto& s : r.singular_points) j["singular_points"].push_back(to_json(s));
  j["connected"] = r.connected;
  j["component_count"] = r.component_count;
  j["simple_root_count"] = r.simple_root_count;
  return j;
}

Json to_json(const TransitionEvent& e) {
  return Json{{"t_star", e.t_star},
              {"kind", to_string(e.kind)},
              {"z_location", e.z_location},
              {"components_before", e.components_before},
              {"components_after", e.components_after}};
}

Json to_json(const CriticalPoint& c) {
  return Json{{"label", c.label}, {"kind", to_string(c.kind)}, {"x", c.x}, {"t", c.t}, {"residual", c.residual}};
}

Json to_json(const Window& w) { return Json::array({w.h_min, w.h_max, w.v_min, w.v_max}); }

Json to_json(const HyperellipticFamily& f) {
  Json j;
  j["degree"] = f.degree();
  j["polynomial"] = f.polynomial().to_string();
  j["discriminant"] = f.discriminant().to_string();
  return j;
}

}  // namespace hamcurve::cli
