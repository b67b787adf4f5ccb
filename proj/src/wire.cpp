#include "u3t/wire.hpp"

namespace u3t::wire {

json to_json(const SpotRef& ref) { return {{"field", ref.field.value()}, {"spot", ref.spot.value()}}; }

json to_json(const Placement& p) {
    return {{"mark", std::string(1, to_char(p.mark))}, {"field", p.at.field.value()}, {"spot", p.at.spot.value()}};
}

json to_json(const Opening& opening) {
    json placements = json::array();
    for (const auto& p : opening.placements) placements.push_back(to_json(p));
    return {{"placements", placements}, {"x5_field", opening.x5_field.value()}};
}

json to_json(const OpeningClass& cls) {
    switch (cls.kind) {
        case OpeningClass::Kind::Playable: return {{"class", "playable"}};
        case OpeningClass::Kind::ForcedWinPattern: return {{"class", "forced_win_pattern"}};
        case OpeningClass::Kind::Illegal:
            return {{"class", "illegal"},
                    {"conflict_index", cls.illegal->conflict_index},
                    {"occupied_cell", to_json(cls.illegal->occupied)}};
    }
    return nullptr;
}

json to_json(const GameStatus& status) {
    switch (status.kind) {
        case GameStatus::Kind::Won: return *status.winner == Mark::X ? "x_won" : "o_won";
        case GameStatus::Kind::Draw: return "draw";
        case GameStatus::Kind::InProgress: break;
    }
    return "in_progress";
}

json to_json(const CensusReport& report) {
    json by_index = json::object();
    for (const auto& [index, count] : report.illegal_by_conflict_index) {
        by_index[std::to_string(index)] = count;
    }
    auto frac = [&](std::int64_t count) {
        const Fraction f = report.fraction(count);
        return json{{"numerator", f.numerator}, {"denominator", f.denominator}, {"decimal", f.percent()}};
    };
    return {
        {"total", report.total},
        {"illegal", report.illegal},
        {"forced_win_pattern_raw", report.forced_win_pattern_raw},
        {"forced_win_legal", report.forced_win_legal},
        {"playable", report.playable},
        {"illegal_by_conflict_index", by_index},
        {"fractions",
         {
             {"illegal", frac(report.illegal)},
             {"forced_win_pattern_raw", frac(report.forced_win_pattern_raw)},
             {"forced_win_legal", frac(report.forced_win_legal)},
             {"playable", frac(report.playable)},
         }},
    };
}

json describe_sequence(const DigitSequence& seq) {
    json out = to_json(decode(seq));
    out["seq"] = seq.to_string();
    out["classification"] = to_json(classify(seq));
    return out;
}

}  // namespace u3t::wire
