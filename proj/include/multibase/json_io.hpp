#pragma once

#include "multibase/asymptotics.hpp"
#include "multibase/count_tables.hpp"
#include "multibase/saddle.hpp"
#include "multibase/sampler.hpp"
#include "multibase/tail_bounds.hpp"

#include <json.hpp>

namespace multibase {

// JSON views of the report types. BigInt/BigRational values are serialized as
// decimal strings so arbitrary precision survives a round-trip.
nlohmann::json to_json(const BaseSystem& system);
nlohmann::json to_json(const Representation& rep);
nlohmann::json to_json(const SaddleResult& res);
nlohmann::json to_json(const SaddleEvaluation& ev);
nlohmann::json to_json(const StatReport& report);
nlohmann::json to_json(const TailReport& report);
nlohmann::json to_json(const Theorem1Constants& c);
nlohmann::json to_json(const Theorem2Constants& c);

} // namespace multibase
