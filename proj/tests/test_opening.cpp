#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "u3t/digit_source.hpp"
#include "u3t/opening.hpp"

using namespace u3t;

namespace {

DigitSequence seq(std::string_view text) {
    auto s = DigitSequence::parse(text);
    REQUIRE(s.has_value());
    return *s;
}

SpotRef at(int f, int s) { return {Digit(f), Digit(s)}; }

std::array<int, 5> raw(const DigitSequence& s) {
    std::array<int, 5> d{};
    for (int i = 0; i < 5; ++i) d[i] = s[i].value();
    return d;
}

std::vector<Digit> digits_of(std::string_view text) {
    std::vector<Digit> out;
    for (char c : text) out.push_back(*Digit::from_char(c));
    return out;
}

}  // namespace

TEST_CASE("DigitSequence text format") {
    CHECK(seq("61245").to_string() == "61245");
    CHECK_FALSE(DigitSequence::parse("6124").has_value());
    CHECK_FALSE(DigitSequence::parse("612450").has_value());
    CHECK_FALSE(DigitSequence::parse("61249").has_value());
    CHECK_FALSE(DigitSequence::parse("6-245").has_value());
    CHECK(DigitSequence::from_index(0).to_string() == "00000");
    CHECK(DigitSequence::from_index(kSequenceCount - 1).to_string() == "88888");
    CHECK_THROWS_AS((void)DigitSequence::from_index(kSequenceCount), std::out_of_range);
}

TEST_CASE("decode follows the five placement rules") {
    const Opening o = decode(seq("61245"));
    CHECK(o.placements[0] == Placement{Mark::X, at(6, 1)});
    CHECK(o.placements[1] == Placement{Mark::O, at(1, 2)});
    CHECK(o.placements[2] == Placement{Mark::X, at(2, 4)});
    CHECK(o.placements[3] == Placement{Mark::O, at(4, 5)});
    CHECK(o.x5_field == Digit(5));

    const Opening zeros = decode(seq("00000"));
    for (const auto& p : zeros.placements) CHECK(p.at == at(0, 0));
    CHECK(zeros.x5_field == Digit(0));

    const Opening pattern = decode(seq("44148"));
    CHECK(pattern.placements[0].at == at(4, 4));
    CHECK(pattern.placements[1].at == at(4, 1));
    CHECK(pattern.placements[2].at == at(1, 4));
    CHECK(pattern.placements[3].at == at(4, 8));
    CHECK(pattern.x5_field == Digit(8));
}

TEST_CASE("forced-win digit pattern") {
    CHECK(matches_forced_win_pattern(seq("44148")));
    CHECK_FALSE(matches_forced_win_pattern(seq("61245")));
    CHECK(matches_forced_win_pattern(seq("44141")));
    CHECK_FALSE(matches_forced_win_pattern(seq("44444")));
    CHECK_FALSE(matches_forced_win_pattern(seq("44441")));
    CHECK_FALSE(matches_forced_win_pattern(seq("44144")));
}

TEST_CASE("apply_opening on the worked example") {
    auto result = apply_opening(seq("61245"));
    REQUIRE(std::holds_alternative<BoardState>(result));
    const BoardState& b = std::get<BoardState>(result);
    CHECK(b.at(at(6, 1)) == Cell::X);
    CHECK(b.at(at(2, 4)) == Cell::X);
    CHECK(b.at(at(1, 2)) == Cell::O);
    CHECK(b.at(at(4, 5)) == Cell::O);
    CHECK(b.forced_field == Digit(5));
    CHECK(b.to_move == Mark::X);
    CHECK(b.move_count == 4);

    const auto moves = legal_moves(b);
    REQUIRE(moves.size() == 9);
    for (int s = 0; s < 9; ++s) CHECK(moves[s] == at(5, s));
}

TEST_CASE("apply_opening reports the first conflicting placement") {
    CHECK(std::get<Illegal>(apply_opening(seq("44444"))) == Illegal{2, at(4, 4)});
    CHECK(std::get<Illegal>(apply_opening(seq("84441"))) == Illegal{3, at(4, 4)});
    CHECK(std::get<Illegal>(apply_opening(seq("81444"))) == Illegal{4, at(4, 4)});
    CHECK(std::get<Illegal>(apply_opening(seq("44144"))) == Illegal{4, at(4, 4)});
    CHECK(std::get<Illegal>(apply_opening(seq("41841"))) == Illegal{4, at(4, 1)});
    CHECK(std::get<Illegal>(apply_opening(seq("84141"))) == Illegal{4, at(4, 1)});
}

TEST_CASE("classify examples") {
    CHECK(classify(seq("44148")) == OpeningClass::forced_win_pattern());
    CHECK(classify(seq("44144")).kind == OpeningClass::Kind::Illegal);
    CHECK(classify(seq("44144")).illegal->conflict_index == 4);
    CHECK(classify(seq("01234")) == OpeningClass::playable());
    CHECK(classify(seq("61245")) == OpeningClass::playable());
    // Pattern shape, but O4 lands on O2's cell.
    CHECK(classify(seq("44141")).kind == OpeningClass::Kind::Illegal);
    CHECK(to_string(classify(seq("84441"))) == "Illegal(3)");
}

TEST_CASE("exhaustive opening invariants over all 59049 sequences") {
    std::map<OpeningClass::Kind, int> tally;
    int pattern_illegal = 0;
    for (int i = 0; i < kSequenceCount; ++i) {
        const DigitSequence s = DigitSequence::from_index(i);
        const Opening o = decode(s);

        for (int k = 1; k < 4; ++k) CHECK(o.placements[k].at.field == o.placements[k - 1].at.spot);
        for (int k = 0; k < 4; ++k) CHECK(o.placements[k].mark == (k % 2 ? Mark::O : Mark::X));

        const OpeningClass cls = classify(s);
        ++tally[cls.kind];

        const int collision = oracle::first_collision(raw(s));
        if (collision != 0) {
            REQUIRE(cls.kind == OpeningClass::Kind::Illegal);
            CHECK(cls.illegal->conflict_index == collision);
            CHECK(s.digits()[collision - 1] == cls.illegal->occupied.field);
            CHECK(s.digits()[collision] == cls.illegal->occupied.spot);
        } else {
            REQUIRE(cls.kind != OpeningClass::Kind::Illegal);
            const BoardState b = std::get<BoardState>(apply_opening(s));
            CHECK(b.move_count == 4);
            CHECK(b.to_move == Mark::X);
            CHECK(b.forced_field == s[4]);
            int xs = 0;
            int os = 0;
            for (const auto& f : b.fields) {
                CHECK(f.is_open());
                xs += static_cast<int>(std::count(f.cells.begin(), f.cells.end(), Cell::X));
                os += static_cast<int>(std::count(f.cells.begin(), f.cells.end(), Cell::O));
            }
            CHECK(xs == 2);
            CHECK(os == 2);
        }

        if (matches_forced_win_pattern(s)) {
            const bool illegal = cls.kind == OpeningClass::Kind::Illegal;
            CHECK(illegal == (s[4] == s[2]));
            pattern_illegal += illegal;
        }
        if (s[0] == Digit(4) && s[1] == Digit(4) && s[2] == Digit(4)) {
            CHECK(cls.kind == OpeningClass::Kind::Illegal);
        }
    }
    int total = 0;
    for (const auto& [kind, n] : tally) total += n;
    CHECK(total == kSequenceCount);
    CHECK(pattern_illegal == 8);
}

TEST_CASE("uniform_below is unbiased and stable") {
    std::mt19937 engine(99);
    std::array<int, 9> counts{};
    constexpr int kDraws = 90000;
    for (int i = 0; i < kDraws; ++i) ++counts[uniform_below(engine, 9)];
    // Pearson chi-square, 8 degrees of freedom; 26.12 is the 0.001 critical value.
    double chi2 = 0;
    for (int c : counts) {
        const double diff = c - kDraws / 9.0;
        chi2 += diff * diff / (kDraws / 9.0);
    }
    CHECK(chi2 < 26.12);

    SeededDigitSource a(5);
    SeededDigitSource b(5);
    for (int i = 0; i < 100; ++i) CHECK(a.next_digit() == b.next_digit());
}

TEST_CASE("roll is deterministic and only returns playable openings") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        SeededDigitSource s1(seed);
        SeededDigitSource s2(seed);
        const RollResult r1 = roll(s1);
        const RollResult r2 = roll(s2);
        CHECK(r1.seq == r2.seq);
        CHECK(r1.rejected_draws == r2.rejected_draws);
        CHECK(classify(r1.seq) == OpeningClass::playable());
        CHECK(r1.opening == decode(r1.seq));
        CHECK(r1.board == std::get<BoardState>(apply_opening(r1.seq)));
    }
}

TEST_CASE("roll rejects until an acceptable draw appears") {
    ScriptedDigitSource source(digits_of("44444" "84441" "44148" "61245"));
    const RollResult r = roll(source);
    CHECK(r.seq.to_string() == "61245");
    CHECK(r.rejected_draws == 3);

    ScriptedDigitSource allow_source(digits_of("44444" "44148"));
    const RollResult allowed = roll(allow_source, RollPolicy{.max_retries = 10, .reject_forced_win_pattern = false});
    CHECK(allowed.seq.to_string() == "44148");
    CHECK(allowed.rejected_draws == 1);
}

TEST_CASE("roll gives up on a broken source") {
    ScriptedDigitSource stuck(digits_of("44444"));
    CHECK_THROWS_AS((void)roll(stuck), RetriesExhausted);
    ScriptedDigitSource pattern(digits_of("44148"));
    CHECK_THROWS_AS((void)roll(pattern, RollPolicy{.max_retries = 3, .reject_forced_win_pattern = true}),
                    RetriesExhausted);
    ScriptedDigitSource fine(digits_of("61245"));
    CHECK_THROWS_AS((void)roll(fine, RollPolicy{.max_retries = 0, .reject_forced_win_pattern = true}),
                    std::invalid_argument);
}
