#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace u3t {

// A field or spot index in 0..8, row-major (0 = top-left, 4 = center).
class Digit {
public:
    constexpr Digit() = default;
    explicit Digit(int value);

    [[nodiscard]] constexpr int value() const noexcept { return value_; }
    [[nodiscard]] static std::optional<Digit> from_char(char c) noexcept;
    [[nodiscard]] char to_char() const noexcept { return static_cast<char>('0' + value_); }

    friend constexpr bool operator==(Digit, Digit) = default;
    friend constexpr auto operator<=>(Digit, Digit) = default;

private:
    std::uint8_t value_ = 0;
};

struct SpotRef {
    Digit field;
    Digit spot;

    friend constexpr bool operator==(const SpotRef&, const SpotRef&) = default;
    friend constexpr auto operator<=>(const SpotRef&, const SpotRef&) = default;
};

std::string to_string(const SpotRef& ref);  // "(i, j)"

enum class Mark : std::uint8_t { X, O };
enum class Cell : std::uint8_t { Empty, X, O };

[[nodiscard]] constexpr Mark opponent(Mark m) noexcept { return m == Mark::X ? Mark::O : Mark::X; }
[[nodiscard]] constexpr Cell to_cell(Mark m) noexcept { return m == Mark::X ? Cell::X : Cell::O; }
[[nodiscard]] char to_char(Mark m) noexcept;
[[nodiscard]] char to_char(Cell c) noexcept;

enum class FieldStatus : std::uint8_t { Open, WonByX, WonByO, Drawn };

struct FieldState {
    std::array<Cell, 9> cells{};
    FieldStatus status = FieldStatus::Open;

    [[nodiscard]] bool is_open() const noexcept { return status == FieldStatus::Open; }

    friend bool operator==(const FieldState&, const FieldState&) = default;
};

struct Placement {
    Mark mark;
    SpotRef at;

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct GameStatus {
    enum class Kind : std::uint8_t { InProgress, Won, Draw };
    Kind kind = Kind::InProgress;
    std::optional<Mark> winner;

    [[nodiscard]] static GameStatus in_progress() { return {}; }
    [[nodiscard]] static GameStatus won_by(Mark m) { return {Kind::Won, m}; }
    [[nodiscard]] static GameStatus draw() { return {Kind::Draw, std::nullopt}; }
    [[nodiscard]] bool is_terminal() const noexcept { return kind != Kind::InProgress; }

    friend bool operator==(const GameStatus&, const GameStatus&) = default;
};

std::string to_string(const GameStatus& status);

struct BoardState {
    std::array<FieldState, 9> fields{};
    Mark to_move = Mark::X;
    std::optional<Digit> forced_field;  // nullopt = any open field
    int move_count = 0;
    std::vector<Placement> history;

    [[nodiscard]] Cell at(SpotRef ref) const noexcept {
        return fields[ref.field.value()].cells[ref.spot.value()];
    }

    friend bool operator==(const BoardState&, const BoardState&) = default;
};

enum class IllegalMoveReason : std::uint8_t { GameOver, WrongField, FieldClosed, CellOccupied };

std::string_view to_string(IllegalMoveReason reason) noexcept;

class IllegalMove : public std::runtime_error {
public:
    IllegalMove(IllegalMoveReason reason, SpotRef at);

    [[nodiscard]] IllegalMoveReason reason() const noexcept { return reason_; }
    [[nodiscard]] SpotRef at() const noexcept { return at_; }

private:
    IllegalMoveReason reason_;
    SpotRef at_;
};

// The 8 three-in-a-row lines of a 3x3 grid, row-major indices.
inline constexpr std::array<std::array<int, 3>, 8> kLines{{
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8},
    {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
    {0, 4, 8}, {2, 4, 6},
}};

[[nodiscard]] std::optional<Mark> line_winner(const std::array<Cell, 9>& cells) noexcept;

[[nodiscard]] BoardState new_board();
[[nodiscard]] GameStatus game_status(const BoardState& state) noexcept;
[[nodiscard]] std::vector<SpotRef> legal_moves(const BoardState& state);

// Why `at` cannot be played now, or nullopt if it can.
[[nodiscard]] std::optional<IllegalMoveReason> check_move(const BoardState& state, SpotRef at) noexcept;

// Throws IllegalMove; the input state is never modified.
[[nodiscard]] BoardState apply_move(const BoardState& state, SpotRef at);

// Canonical 83-character form: 81 cells (field-major, spot-minor) over
// {'.', 'X', 'O'}, then the side to move, then the forced field or '-'.
[[nodiscard]] std::string serialize(const BoardState& state);

// Inverse of serialize. The text form does not record move order, so the
// rebuilt history lists the X and O marks interleaved in board order.
// Throws std::invalid_argument on malformed or inconsistent input.
[[nodiscard]] BoardState parse_board(std::string_view text);

// 11x11 character sketch of the full board with field separators.
[[nodiscard]] std::string render_sketch(const BoardState& state);

}  // namespace u3t
