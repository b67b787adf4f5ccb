#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "u3t/opening.hpp"

namespace u3t {

// Exact count over a fixed sample space. Never reduced, so the denominator
// stays 59049 for every census figure.
struct Fraction {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    [[nodiscard]] std::string to_string() const;  // "56/59049"
    // Percentage to 3 significant digits, e.g. "0.0948%". Display only.
    [[nodiscard]] std::string percent() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct CensusReport {
    std::int64_t total = 0;
    std::int64_t illegal = 0;
    std::int64_t forced_win_pattern_raw = 0;  // pattern match, legal or not
    std::int64_t forced_win_legal = 0;        // pattern match and legal
    std::int64_t playable = 0;
    std::map<int, std::int64_t> illegal_by_conflict_index;  // keys 2, 3, 4

    [[nodiscard]] Fraction fraction(std::int64_t count) const { return {count, total}; }

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

// Classifies all 9^5 digit sequences in lexicographic order.
[[nodiscard]] CensusReport enumerate_all();

// Memoized enumerate_all; safe to call from any thread.
[[nodiscard]] const CensusReport& census();

// Probability that one five-digit draw is rejected by `policy`.
[[nodiscard]] Fraction expected_rejection_fraction(const RollPolicy& policy);

// Plain-text terminal table, one row per figure: name, count, fraction, percent.
[[nodiscard]] std::string render_table(const CensusReport& report);

}  // namespace u3t
