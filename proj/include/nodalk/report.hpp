#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nodalk/scenario.hpp"
#include "nodalk/stability.hpp"

namespace nodalk {

nlohmann::json interval_to_json(const RatInterval& w);
RatInterval interval_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
/// Inverse of verdict_to_json; extra keys are ignored.
Verdict verdict_from_json(const nlohmann::json& j);

nlohmann::json scenario_to_json(const Scenario& s);

void write_verdict_text(std::ostream& os, const Scenario& s, const Verdict& v);
/// Machine-readable report: one JSON document with stable key order.
void write_verdict_json(std::ostream& os, const Scenario& s, const Verdict& v);

} // namespace nodalk
