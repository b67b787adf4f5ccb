#include "u3t/core_rules.hpp"

#include <sstream>

namespace u3t {

Digit::Digit(int value) {
    if (value < 0 || value > 8) {
        throw std::out_of_range("digit must be in 0..8, got " + std::to_string(value));
    }
    value_ = static_cast<std::uint8_t>(value);
}

std::optional<Digit> Digit::from_char(char c) noexcept {
    if (c < '0' || c > '8') return std::nullopt;
    return Digit(c - '0');
}

std::string to_string(const SpotRef& ref) {
    std::ostringstream out;
    out << '(' << ref.field.value() << ", " << ref.spot.value() << ')';
    return out.str();
}

char to_char(Mark m) noexcept { return m == Mark::X ? 'X' : 'O'; }

char to_char(Cell c) noexcept {
    switch (c) {
        case Cell::X: return 'X';
        case Cell::O: return 'O';
        default: return '.';
    }
}

std::string to_string(const GameStatus& status) {
    switch (status.kind) {
        case GameStatus::Kind::Won: return std::string(1, to_char(*status.winner)) + " wins";
        case GameStatus::Kind::Draw: return "Draw";
        default: return "In progress";
    }
}

std::string_view to_string(IllegalMoveReason reason) noexcept {
    switch (reason) {
        case IllegalMoveReason::GameOver: return "GameOver";
        case IllegalMoveReason::WrongField: return "WrongField";
        case IllegalMoveReason::FieldClosed: return "FieldClosed";
        case IllegalMoveReason::CellOccupied: return "CellOccupied";
    }
    return "Unknown";
}

IllegalMove::IllegalMove(IllegalMoveReason reason, SpotRef at)
    : std::runtime_error("illegal move at " + to_string(at) + ": " + std::string(to_string(reason))),
      reason_(reason),
      at_(at) {}

std::optional<Mark> line_winner(const std::array<Cell, 9>& cells) noexcept {
    for (const auto& line : kLines) {
        const Cell c = cells[line[0]];
        if (c != Cell::Empty && c == cells[line[1]] && c == cells[line[2]]) {
            return c == Cell::X ? Mark::X : Mark::O;
        }
    }
    return std::nullopt;
}

namespace {

FieldStatus compute_status(const std::array<Cell, 9>& cells) noexcept {
    if (auto w = line_winner(cells)) {
        return *w == Mark::X ? FieldStatus::WonByX : FieldStatus::WonByO;
    }
    for (Cell c : cells) {
        if (c == Cell::Empty) return FieldStatus::Open;
    }
    return FieldStatus::Drawn;
}

}  // namespace

BoardState new_board() { return BoardState{}; }

GameStatus game_status(const BoardState& state) noexcept {
    std::array<Cell, 9> macro{};
    bool any_open = false;
    for (int i = 0; i < 9; ++i) {
        switch (state.fields[i].status) {
            case FieldStatus::WonByX: macro[i] = Cell::X; break;
            case FieldStatus::WonByO: macro[i] = Cell::O; break;
            case FieldStatus::Open: any_open = true; break;
            case FieldStatus::Drawn: break;
        }
    }
    if (auto w = line_winner(macro)) return GameStatus::won_by(*w);
    if (!any_open) return GameStatus::draw();
    return GameStatus::in_progress();
}

std::vector<SpotRef> legal_moves(const BoardState& state) {
    std::vector<SpotRef> moves;
    if (game_status(state).is_terminal()) return moves;
    auto collect = [&](int f) {
        const FieldState& field = state.fields[f];
        if (!field.is_open()) return;
        for (int s = 0; s < 9; ++s) {
            if (field.cells[s] == Cell::Empty) moves.push_back({Digit(f), Digit(s)});
        }
    };
    if (state.forced_field && state.fields[state.forced_field->value()].is_open()) {
        collect(state.forced_field->value());
    } else {
        for (int f = 0; f < 9; ++f) collect(f);
    }
    return moves;
}

std::optional<IllegalMoveReason> check_move(const BoardState& state, SpotRef at) noexcept {
    if (game_status(state).is_terminal()) return IllegalMoveReason::GameOver;
    if (state.forced_field && *state.forced_field != at.field &&
        state.fields[state.forced_field->value()].is_open()) {
        return IllegalMoveReason::WrongField;
    }
    if (!state.fields[at.field.value()].is_open()) return IllegalMoveReason::FieldClosed;
    if (state.at(at) != Cell::Empty) return IllegalMoveReason::CellOccupied;
    return std::nullopt;
}

BoardState apply_move(const BoardState& state, SpotRef at) {
    if (auto reason = check_move(state, at)) throw IllegalMove(*reason, at);

    BoardState next = state;
    FieldState& field = next.fields[at.field.value()];
    field.cells[at.spot.value()] = to_cell(state.to_move);
    field.status = compute_status(field.cells);

    next.history.push_back({state.to_move, at});
    next.to_move = opponent(state.to_move);
    next.move_count = state.move_count + 1;
    if (next.fields[at.spot.value()].is_open()) {
        next.forced_field = at.spot;
    } else {
        next.forced_field.reset();
    }
    return next;
}

std::string serialize(const BoardState& state) {
    std::string out;
    out.reserve(83);
    for (const auto& field : state.fields) {
        for (Cell c : field.cells) out.push_back(to_char(c));
    }
    out.push_back(to_char(state.to_move));
    out.push_back(state.forced_field ? state.forced_field->to_char() : '-');
    return out;
}

BoardState parse_board(std::string_view text) {
    if (text.size() != 83) {
        throw std::invalid_argument("board text must be 83 characters, got " + std::to_string(text.size()));
    }
    BoardState state;
    std::vector<SpotRef> xs;
    std::vector<SpotRef> os;
    for (int f = 0; f < 9; ++f) {
        for (int s = 0; s < 9; ++s) {
            const char ch = text[f * 9 + s];
            Cell c = Cell::Empty;
            if (ch == 'X') {
                c = Cell::X;
                xs.push_back({Digit(f), Digit(s)});
            } else if (ch == 'O') {
                c = Cell::O;
                os.push_back({Digit(f), Digit(s)});
            } else if (ch != '.') {
                throw std::invalid_argument(std::string("bad cell character '") + ch + "'");
            }
            state.fields[f].cells[s] = c;
        }
        state.fields[f].status = compute_status(state.fields[f].cells);
    }

    const char mover = text[81];
    if (mover != 'X' && mover != 'O') throw std::invalid_argument("side to move must be 'X' or 'O'");
    state.to_move = mover == 'X' ? Mark::X : Mark::O;

    const auto x_count = static_cast<int>(xs.size());
    const auto o_count = static_cast<int>(os.size());
    if (x_count != o_count && x_count != o_count + 1) {
        throw std::invalid_argument("mark counts violate X/O parity");
    }
    if ((state.to_move == Mark::X) != (x_count == o_count)) {
        throw std::invalid_argument("side to move disagrees with mark counts");
    }

    const char forced = text[82];
    if (forced != '-') {
        auto d = Digit::from_char(forced);
        if (!d) throw std::invalid_argument(std::string("bad forced field '") + forced + "'");
        if (!state.fields[d->value()].is_open()) {
            throw std::invalid_argument("forced field is not open");
        }
        state.forced_field = d;
    }

    state.move_count = x_count + o_count;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        state.history.push_back({Mark::X, xs[i]});
        if (i < os.size()) state.history.push_back({Mark::O, os[i]});
    }
    return state;
}

std::string render_sketch(const BoardState& state) {
    std::string out;
    for (int row = 0; row < 9; ++row) {
        if (row == 3 || row == 6) out += "---+---+---\n";
        for (int col = 0; col < 9; ++col) {
            if (col == 3 || col == 6) out.push_back('|');
            const int field = (row / 3) * 3 + col / 3;
            const int spot = (row % 3) * 3 + col % 3;
            out.push_back(to_char(state.fields[field].cells[spot]));
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace u3t
