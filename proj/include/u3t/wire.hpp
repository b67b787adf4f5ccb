#pragma once

// JSON renderings shared by the HTTP service and the CLI.

#include <json.hpp>

#include "u3t/census.hpp"
#include "u3t/core_rules.hpp"
#include "u3t/opening.hpp"

namespace u3t::wire {

using nlohmann::json;

json to_json(const SpotRef& ref);
json to_json(const Placement& p);
json to_json(const Opening& opening);  // {"placements": [...], "x5_field": d}
json to_json(const OpeningClass& cls);  // {"class": "...", "conflict_index"?, "occupied_cell"?}
json to_json(const GameStatus& status);  // "in_progress" | "x_won" | "o_won" | "draw"
json to_json(const CensusReport& report);

// seq + classification + decoded placements.
json describe_sequence(const DigitSequence& seq);

}  // namespace u3t::wire
