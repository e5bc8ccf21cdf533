#pragma once

#include <json.hpp>

#include "kampen/ilp.hpp"
#include "kampen/model.hpp"
#include "kampen/oracle.hpp"

namespace kampen {

// Sizes and provenance of a generated system.
nlohmann::json model_report(const Model& m);

// {"verdict", "assignment" (feasible only), "stats"}.
nlohmann::json verdict_report(const Verdict& v);

nlohmann::json oracle_report(const OracleReport& r);

}  // namespace kampen
