#include "u3t/census.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace u3t {

std::string Fraction::to_string() const {
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::string Fraction::percent() const {
    const double pct = 100.0 * static_cast<double>(numerator) / static_cast<double>(denominator);
    if (pct == 0.0) return "0%";
    // 3 significant digits in fixed notation.
    const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(pct))));
    const int decimals = std::max(0, 2 - magnitude);
    std::ostringstream out;
    out << std::fixed << std::setprecision(decimals) << pct << '%';
    return out.str();
}

CensusReport enumerate_all() {
    CensusReport report;
    report.illegal_by_conflict_index = {{2, 0}, {3, 0}, {4, 0}};
    for (int index = 0; index < kSequenceCount; ++index) {
        const DigitSequence seq = DigitSequence::from_index(index);
        const bool pattern = matches_forced_win_pattern(seq);
        const OpeningClass cls = classify(seq);

        ++report.total;
        if (pattern) ++report.forced_win_pattern_raw;
        switch (cls.kind) {
            case OpeningClass::Kind::Illegal:
                ++report.illegal;
                ++report.illegal_by_conflict_index[cls.illegal->conflict_index];
                break;
            case OpeningClass::Kind::ForcedWinPattern: ++report.forced_win_legal; break;
            case OpeningClass::Kind::Playable: ++report.playable; break;
        }
    }
    return report;
}

const CensusReport& census() {
    static const CensusReport report = enumerate_all();
    return report;
}

Fraction expected_rejection_fraction(const RollPolicy& policy) {
    const CensusReport& r = census();
    const std::int64_t rejected = r.illegal + (policy.reject_forced_win_pattern ? r.forced_win_legal : 0);
    return r.fraction(rejected);
}

std::string render_table(const CensusReport& report) {
    std::ostringstream out;
    auto row = [&](std::string_view name, std::int64_t count) {
        const Fraction f = report.fraction(count);
        out << std::left << std::setw(26) << name << ' ' << std::right << std::setw(6) << count << ' '
            << std::left << std::setw(12) << f.to_string() << ' ' << f.percent() << '\n';
    };
    row("total", report.total);
    row("illegal", report.illegal);
    for (const auto& [index, count] : report.illegal_by_conflict_index) {
        row("illegal_conflict_at_move_" + std::to_string(index), count);
    }
    row("forced_win_pattern_raw", report.forced_win_pattern_raw);
    row("forced_win_legal", report.forced_win_legal);
    row("playable", report.playable);
    return out.str();
}

}  // namespace u3t
