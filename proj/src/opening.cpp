#include "u3t/opening.hpp"

namespace u3t {

std::optional<DigitSequence> DigitSequence::parse(std::string_view text) noexcept {
    if (text.size() != 5) return std::nullopt;
    std::array<Digit, 5> digits{};
    for (std::size_t i = 0; i < 5; ++i) {
        auto d = Digit::from_char(text[i]);
        if (!d) return std::nullopt;
        digits[i] = *d;
    }
    return DigitSequence(digits);
}

DigitSequence DigitSequence::from_index(int index) {
    if (index < 0 || index >= kSequenceCount) {
        throw std::out_of_range("sequence index out of range: " + std::to_string(index));
    }
    std::array<Digit, 5> digits{};
    for (int i = 4; i >= 0; --i) {
        digits[i] = Digit(index % 9);
        index /= 9;
    }
    return DigitSequence(digits);
}

std::string DigitSequence::to_string() const {
    std::string s;
    for (Digit d : digits_) s.push_back(d.to_char());
    return s;
}

std::string_view to_string(OpeningClass::Kind kind) noexcept {
    switch (kind) {
        case OpeningClass::Kind::Playable: return "Playable";
        case OpeningClass::Kind::ForcedWinPattern: return "ForcedWinPattern";
        case OpeningClass::Kind::Illegal: return "Illegal";
    }
    return "Unknown";
}

std::string to_string(const OpeningClass& cls) {
    std::string s(to_string(cls.kind));
    if (cls.illegal) s += "(" + std::to_string(cls.illegal->conflict_index) + ")";
    return s;
}

RetriesExhausted::RetriesExhausted(int attempts)
    : std::runtime_error("no acceptable opening after " + std::to_string(attempts) +
                         " draws; the randomness source looks broken") {}

Opening decode(const DigitSequence& seq) noexcept {
    return Opening{
        .placements = {{
            {Mark::X, {seq[0], seq[1]}},
            {Mark::O, {seq[1], seq[2]}},
            {Mark::X, {seq[2], seq[3]}},
            {Mark::O, {seq[3], seq[4]}},
        }},
        .x5_field = seq[4],
    };
}

bool matches_forced_win_pattern(const DigitSequence& seq) noexcept {
    const Digit four(4);
    return seq[0] == four && seq[1] == four && seq[2] != four && seq[3] == four && seq[4] != four;
}

std::variant<BoardState, Illegal> apply_opening(const DigitSequence& seq) {
    const Opening opening = decode(seq);
    BoardState board = new_board();
    for (int k = 0; k < 4; ++k) {
        const SpotRef at = opening.placements[k].at;
        // The chain property keeps every placement inside the forced field,
        // so an occupied cell is the only way an opening can fail.
        if (board.at(at) != Cell::Empty) return Illegal{k + 1, at};
        board = apply_move(board, at);
    }
    return board;
}

OpeningClass classify(const DigitSequence& seq) {
    auto applied = apply_opening(seq);
    if (auto* bad = std::get_if<Illegal>(&applied)) return OpeningClass::illegal_at(*bad);
    if (matches_forced_win_pattern(seq)) return OpeningClass::forced_win_pattern();
    return OpeningClass::playable();
}

RollResult roll(DigitSource& source, const RollPolicy& policy) {
    if (policy.max_retries < 1) throw std::invalid_argument("max_retries must be at least 1");
    for (int attempt = 0; attempt < policy.max_retries; ++attempt) {
        std::array<Digit, 5> digits{};
        for (Digit& d : digits) d = source.next_digit();
        const DigitSequence seq(digits);

        auto applied = apply_opening(seq);
        if (std::holds_alternative<Illegal>(applied)) continue;
        if (policy.reject_forced_win_pattern && matches_forced_win_pattern(seq)) continue;
        return RollResult{seq, decode(seq), std::get<BoardState>(std::move(applied)), attempt};
    }
    throw RetriesExhausted(policy.max_retries);
}

}  // namespace u3t
