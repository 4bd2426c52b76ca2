#pragma once

#include <json.hpp>

#include "diagasym/asymptotics.hpp"
#include "diagasym/diffapprox.hpp"
#include "diagasym/recurrence.hpp"

namespace diagasym {

// JSON renderings of the report types.  Exact rationals appear as "p/q"
// strings, floats as decimal strings next to an explicit precision field;
// identical inputs produce byte-identical documents.

nlohmann::json to_json(const SmoothPointReport& rep);
nlohmann::json to_json(const PRecurrence& rec);
nlohmann::json to_json(const GrowthCandidates& g);
nlohmann::json to_json(const SingularityEstimate& s);
nlohmann::json to_json(const DifferentialApproximant& da);
nlohmann::json to_json(const SubdominanceReport& rep);

PRecurrence p_recurrence_from_json(const nlohmann::json& j);

}  // namespace diagasym
