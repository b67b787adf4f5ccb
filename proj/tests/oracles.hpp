#pragma once

// Reference implementations used only by tests. None of these call into the
// rules engine; they work from raw digits and (row, col) coordinates.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace u3t::oracle {

// 0 = empty, 1 = X, 2 = O.
using Grid3 = std::array<std::array<int, 3>, 3>;

// Winner of a 3x3 grid by explicit row/column/diagonal scans. Returns every
// mark that owns a full line (0, 1 or 2 entries).
inline std::vector<int> winners(const Grid3& g) {
    std::vector<int> out;
    auto note = [&](int m) {
        if (m != 0 && (out.empty() || out.front() != m)) out.push_back(m);
    };
    for (int r = 0; r < 3; ++r) {
        if (g[r][0] == g[r][1] && g[r][1] == g[r][2]) note(g[r][0]);
    }
    for (int c = 0; c < 3; ++c) {
        if (g[0][c] == g[1][c] && g[1][c] == g[2][c]) note(g[0][c]);
    }
    if (g[0][0] == g[1][1] && g[1][1] == g[2][2]) note(g[1][1]);
    if (g[0][2] == g[1][1] && g[1][1] == g[2][0]) note(g[1][1]);
    return out;
}

struct Move {
    int mark;  // 1 = X, 2 = O
    int field;
    int spot;
};

// Outcome of replaying a move list on a 9x9 grid: the move index that broke
// a rule (or -1), and the final result: 0 in progress, 1 X won, 2 O won, 3 draw.
struct PlayoutVerdict {
    int first_bad_move = -1;
    int result = 0;
};

inline PlayoutVerdict check_playout(const std::vector<Move>& moves) {
    std::array<std::array<int, 9>, 9> grid{};  // [row][col]
    std::array<int, 9> field_owner{};            // 0 open, 1 X, 2 O, 3 drawn
    int forced = -1;
    int expected_mark = 1;
    PlayoutVerdict verdict;

    auto field_grid = [&](int f) {
        Grid3 g{};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) g[r][c] = grid[(f / 3) * 3 + r][(f % 3) * 3 + c];
        }
        return g;
    };
    auto macro_result = [&]() {
        Grid3 m{};
        bool open = false;
        for (int f = 0; f < 9; ++f) {
            const int o = field_owner[f];
            m[f / 3][f % 3] = (o == 1 || o == 2) ? o : 0;
            open = open || o == 0;
        }
        auto w = winners(m);
        if (!w.empty()) return w.front();
        return open ? 0 : 3;
    };

    for (std::size_t i = 0; i < moves.size(); ++i) {
        const Move& mv = moves[i];
        const int row = (mv.field / 3) * 3 + mv.spot / 3;
        const int col = (mv.field % 3) * 3 + mv.spot % 3;
        const bool ok = macro_result() == 0 && mv.mark == expected_mark && field_owner[mv.field] == 0 &&
                        grid[row][col] == 0 && (forced == -1 || forced == mv.field);
        if (!ok) {
            verdict.first_bad_move = static_cast<int>(i);
            return verdict;
        }
        grid[row][col] = mv.mark;
        const Grid3 g = field_grid(mv.field);
        auto w = winners(g);
        if (!w.empty()) {
            field_owner[mv.field] = w.front();
        } else {
            bool full = true;
            for (const auto& r : g) {
                for (int v : r) full = full && v != 0;
            }
            if (full) field_owner[mv.field] = 3;
        }
        forced = field_owner[mv.spot] == 0 ? mv.spot : -1;
        expected_mark = 3 - expected_mark;
    }
    verdict.result = macro_result();
    return verdict;
}

// Collision predicate over raw digits: placement k occupies (d[k], d[k+1]).
// Returns the 1-based index of the first placement hitting an earlier one,
// or 0 if all four cells are distinct.
inline int first_collision(const std::array<int, 5>& d) {
    for (int k = 1; k < 4; ++k) {
        for (int j = 0; j < k; ++j) {
            if (d[k] == d[j] && d[k + 1] == d[j + 1]) return k + 1;
        }
    }
    return 0;
}

// Number of 5-digit sequences (digits 0..8) satisfying at least one of the
// six pairwise collision conditions, by inclusion-exclusion. A conjunction
// of equalities between positions leaves 9^(components) sequences.
inline std::int64_t illegal_count_by_inclusion_exclusion() {
    // Each condition equates pairs of digit positions.
    using Eq = std::array<int, 2>;
    const std::vector<std::vector<Eq>> conditions = {
        {{0, 1}, {1, 2}},  // X1 = O2:  d1 = d2 = d3
        {{1, 2}, {2, 3}},  // O2 = X3:  d2 = d3 = d4
        {{2, 3}, {3, 4}},  // X3 = O4:  d3 = d4 = d5
        {{0, 2}, {1, 3}},  // X1 = X3:  d1 = d3, d2 = d4
        {{0, 3}, {1, 4}},  // X1 = O4:  d1 = d4, d2 = d5
        {{1, 3}, {2, 4}},  // O2 = O4:  d2 = d4, d3 = d5
    };
    std::int64_t total = 0;
    for (unsigned mask = 1; mask < (1u << conditions.size()); ++mask) {
        std::array<int, 5> parent{0, 1, 2, 3, 4};
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        int bits = 0;
        for (std::size_t c = 0; c < conditions.size(); ++c) {
            if (!(mask & (1u << c))) continue;
            ++bits;
            for (const Eq& eq : conditions[c]) parent[find(eq[0])] = find(eq[1]);
        }
        int components = 0;
        for (int i = 0; i < 5; ++i) components += find(i) == i;
        std::int64_t count = 1;
        for (int i = 0; i < components; ++i) count *= 9;
        total += (bits % 2 == 1) ? count : -count;
    }
    return total;
}

}  // namespace u3t::oracle
