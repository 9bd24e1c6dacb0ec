#pragma once

// JSON forms of the verification reports. Non-finite numbers serialise as
// null; key order is fixed so identical inputs give byte-identical output.

#include "json.hpp"

#include "mnconvex/axioms.hpp"
#include "mnconvex/convexity.hpp"
#include "mnconvex/inequalities.hpp"

namespace mnconvex {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json number_json(double x);

Json to_json(const AxiomReport& r);
Json to_json(const Witness& w);
Json to_json(const ConvexityReport& r);
Json to_json(const HHReport& r);
Json to_json(const HHClosedForm& r);
Json to_json(const BoundsReport& r);
Json to_json(const LipschitzReport& r);

}  // namespace mnconvex
