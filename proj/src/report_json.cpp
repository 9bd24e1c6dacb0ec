#include "mnconvex/report_json.hpp"

#include <cmath>

namespace mnconvex {

Json number_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json to_json(const AxiomReport& r) {
  Json sample = Json::array();
  for (double x : r.worst_sample) sample.push_back(number_json(x));
  return Json{{"axiom", std::string(to_string(r.axiom))},
              {"holds", r.holds},
              {"worst_residual", number_json(r.worst_residual)},
              {"worst_sample", std::move(sample)},
              {"samples", r.samples},
              {"tolerance", r.tolerance}};
}

Json to_json(const Witness& w) {
  return Json{{"u", number_json(w.u)},
              {"v", number_json(w.v)},
              {"lambda", number_json(w.lambda)},
              {"lhs", number_json(w.lhs)},
              {"rhs", number_json(w.rhs)}};
}

Json to_json(const ConvexityReport& r) {
  Json j;
  if (r.holds()) {
    j["verdict"] = "holds";
  } else if (const Witness* w = r.witness()) {
    j["verdict"] = "fails";
    j["witness"] = to_json(*w);
  } else {
    j["verdict"] = "inconclusive";
    j["detail"] = std::get<verdict::Inconclusive>(r.verdict).detail;
  }
  j["checked_points"] = r.checked_points;
  j["max_margin"] = number_json(r.max_margin);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const HHReport& r) {
  return Json{{"left", number_json(r.left)},
              {"middle", number_json(r.middle)},
              {"right", number_json(r.right)},
              {"quad_error", number_json(r.quad_error)},
              {"slack", number_json(r.slack)},
              {"chain_holds", r.chain_holds},
              {"converged", r.converged},
              {"evaluations", r.evaluations}};
}

Json to_json(const HHClosedForm& r) {
  return Json{{"left", number_json(r.left)},
              {"middle", number_json(r.middle)},
              {"right", number_json(r.right)},
              {"quad_error", number_json(r.quad_error)},
              {"converged", r.converged},
              {"evaluations", r.evaluations}};
}

Json to_json(const BoundsReport& r) {
  return Json{{"upper_K", number_json(r.upper_K)},
              {"empirical_sup", number_json(r.empirical_sup)},
              {"empirical_inf", number_json(r.empirical_inf)},
              {"sup_within_bound", r.sup_within_bound},
              {"points", r.points}};
}

Json to_json(const LipschitzReport& r) {
  return Json{{"epsilon", number_json(r.epsilon)},
              {"m1", number_json(r.m1)},
              {"m2", number_json(r.m2)},
              {"K", number_json(r.K)},
              {"delta", number_json(r.delta)},
              {"delta_infinite", r.delta_infinite},
              {"empirical_holds", r.empirical_holds},
              {"max_slope", number_json(r.max_slope)},
              {"pairs", r.pairs}};
}

}  // namespace mnconvex
