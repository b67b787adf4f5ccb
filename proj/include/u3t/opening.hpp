#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "u3t/core_rules.hpp"
#include "u3t/digit_source.hpp"

namespace u3t {

// Five digits d1..d5 driving the first four placements of a game.
class DigitSequence {
public:
    DigitSequence() = default;  // 00000
    explicit DigitSequence(const std::array<Digit, 5>& digits) : digits_(digits) {}

    // Exactly five characters '0'..'8', no separators ("61245").
    [[nodiscard]] static std::optional<DigitSequence> parse(std::string_view text) noexcept;

    // Position `index` in 0..59048 of the lexicographic enumeration.
    [[nodiscard]] static DigitSequence from_index(int index);

    [[nodiscard]] Digit operator[](std::size_t i) const noexcept { return digits_[i]; }
    [[nodiscard]] const std::array<Digit, 5>& digits() const noexcept { return digits_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const DigitSequence&, const DigitSequence&) = default;

private:
    std::array<Digit, 5> digits_{};
};

inline constexpr int kSequenceCount = 9 * 9 * 9 * 9 * 9;

struct Opening {
    // X1, O2, X3, O4; placement k's field is placement k-1's spot.
    std::array<Placement, 4> placements;
    Digit x5_field;

    friend bool operator==(const Opening&, const Opening&) = default;
};

struct Illegal {
    int conflict_index;  // 1-based move number, 2..4
    SpotRef occupied;    // the cell that was already taken

    friend bool operator==(const Illegal&, const Illegal&) = default;
};

struct OpeningClass {
    enum class Kind { Playable, ForcedWinPattern, Illegal };
    Kind kind = Kind::Playable;
    std::optional<Illegal> illegal;  // set iff kind == Illegal

    [[nodiscard]] static OpeningClass playable() { return {}; }
    [[nodiscard]] static OpeningClass forced_win_pattern() { return {Kind::ForcedWinPattern, std::nullopt}; }
    [[nodiscard]] static OpeningClass illegal_at(Illegal i) { return {Kind::Illegal, i}; }

    friend bool operator==(const OpeningClass&, const OpeningClass&) = default;
};

std::string_view to_string(OpeningClass::Kind kind) noexcept;
std::string to_string(const OpeningClass& cls);

struct RollPolicy {
    int max_retries = 1000;
    bool reject_forced_win_pattern = true;
};

struct RollResult {
    DigitSequence seq;
    Opening opening;
    BoardState board;
    int rejected_draws = 0;
};

class RetriesExhausted : public std::runtime_error {
public:
    explicit RetriesExhausted(int attempts);
};

[[nodiscard]] Opening decode(const DigitSequence& seq) noexcept;

// d1 = d2 = d4 = 4 and d3, d5 != 4. Ignores legality.
[[nodiscard]] bool matches_forced_win_pattern(const DigitSequence& seq) noexcept;

// Plays the four decoded placements on a fresh board through apply_move.
[[nodiscard]] std::variant<BoardState, Illegal> apply_opening(const DigitSequence& seq);

[[nodiscard]] OpeningClass classify(const DigitSequence& seq);

// Draws five digits at a time until a sequence is accepted by `policy`.
// Throws RetriesExhausted after policy.max_retries rejected draws in a row.
[[nodiscard]] RollResult roll(DigitSource& source, const RollPolicy& policy = {});

}  // namespace u3t
