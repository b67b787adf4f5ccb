// u3t: randomized Ultimate Tic-Tac-Toe openings from the command line.
//
//   u3t roll [--seed N] [--allow-forced-win] [--format text|json]
//   u3t classify DIGITS [--format text|json]     exit 0 playable, 2 forced-win pattern, 3 illegal
//   u3t census [--format table|json]
//   u3t serve [--host H] [--port P] [--static-dir D] [--persist FILE]

#include <csignal>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "u3t/census.hpp"
#include "u3t/digit_source.hpp"
#include "u3t/http_server.hpp"
#include "u3t/opening.hpp"
#include "u3t/service.hpp"
#include "u3t/wire.hpp"

namespace {

using namespace u3t;

constexpr int kExitMalformed = 1;
constexpr int kExitForcedWin = 2;
constexpr int kExitIllegal = 3;

void print_placements(std::ostream& out, const Opening& opening) {
    static constexpr const char* kNames[] = {"X1", "O2", "X3", "O4"};
    for (int k = 0; k < 4; ++k) {
        out << kNames[k] << ": " << to_string(opening.placements[k].at) << '\n';
    }
    out << "X5: (" << opening.x5_field.value() << ", j)\n";
}

BoardState board_for(const DigitSequence& seq) {
    // Illegal sequences are drawn up to, not including, the conflicting move.
    auto applied = apply_opening(seq);
    if (auto* board = std::get_if<BoardState>(&applied)) return *board;
    const int conflict = std::get<Illegal>(applied).conflict_index;
    const Opening opening = decode(seq);
    BoardState board = new_board();
    for (int k = 0; k + 1 < conflict; ++k) board = apply_move(board, opening.placements[k].at);
    return board;
}

int cmd_roll(std::optional<std::uint64_t> seed, bool allow_forced_win, const std::string& format) {
    const std::uint64_t used_seed = seed.value_or(fresh_seed());
    SeededDigitSource source(used_seed);
    RollPolicy policy;
    policy.reject_forced_win_pattern = !allow_forced_win;

    RollResult rolled;
    try {
        rolled = roll(source, policy);
    } catch (const RetriesExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    const OpeningClass cls = classify(rolled.seq);

    if (format == "json") {
        nlohmann::json out = wire::describe_sequence(rolled.seq);
        out["seed"] = used_seed;
        out["rejected_draws"] = rolled.rejected_draws;
        out["board"] = serialize(rolled.board);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "seed: " << used_seed << '\n'
              << "sequence: " << rolled.seq.to_string() << '\n'
              << "classification: " << to_string(cls) << '\n';
    if (cls.kind == OpeningClass::Kind::ForcedWinPattern) {
        std::cout << "warning: matches the forced-win digit pattern (4,4,x,4,y)\n";
    }
    std::cout << "rejected draws: " << rolled.rejected_draws << '\n';
    print_placements(std::cout, rolled.opening);
    std::cout << '\n' << render_sketch(rolled.board);
    return 0;
}

int cmd_classify(const std::string& digits, const std::string& format) {
    const auto seq = DigitSequence::parse(digits);
    if (!seq) {
        std::cerr << "error: expected exactly 5 digits in 0..8 (e.g. 61245), got \"" << digits << "\"\n";
        return kExitMalformed;
    }
    const OpeningClass cls = classify(*seq);

    if (format == "json") {
        std::cout << wire::describe_sequence(*seq).dump(2) << '\n';
    } else {
        std::cout << "sequence: " << seq->to_string() << '\n' << "classification: " << to_string(cls) << '\n';
        if (cls.illegal) {
            std::cout << "conflict: move " << cls.illegal->conflict_index << " targets "
                      << to_string(cls.illegal->occupied) << ", which is already occupied\n";
        }
        print_placements(std::cout, decode(*seq));
        std::cout << '\n' << render_sketch(board_for(*seq));
    }

    switch (cls.kind) {
        case OpeningClass::Kind::ForcedWinPattern: return kExitForcedWin;
        case OpeningClass::Kind::Illegal: return kExitIllegal;
        default: return 0;
    }
}

int cmd_census(const std::string& format) {
    const CensusReport& report = census();
    if (format == "json") {
        std::cout << wire::to_json(report).dump(2) << '\n';
    } else {
        std::cout << render_table(report);
    }
    return 0;
}

int cmd_serve(const std::string& host, int port, const std::string& static_dir, const std::string& persist) {
    // Route SIGINT/SIGTERM to sigwait below; worker threads inherit the mask.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    std::optional<std::filesystem::path> persist_path;
    if (!persist.empty()) persist_path = persist;
    std::optional<std::filesystem::path> static_path;
    if (!static_dir.empty()) static_path = static_dir;

    try {
        GameService service(persist_path);
        HttpServer server(service, static_path);
        const int bound = server.bind(host, port);
        if (bound < 0) {
            std::cerr << "error: cannot bind " << host << ':' << port << '\n';
            return 1;
        }
        std::cerr << "listening on http://" << host << ':' << bound << " (" << service.session_count()
                  << " sessions restored)\n";

        std::thread loop([&server] { server.serve(); });
        int received = 0;
        sigwait(&signals, &received);
        std::cerr << "shutting down\n";
        server.stop();
        loop.join();
        service.flush();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomized openings for Ultimate Tic-Tac-Toe"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    bool allow_forced_win = false;
    std::string roll_format = "text";
    auto* roll_cmd = app.add_subcommand("roll", "Roll a playable opening by rejection sampling");
    roll_cmd->add_option("--seed", seed, "Seed for a reproducible roll");
    roll_cmd->add_flag("--allow-forced-win", allow_forced_win, "Accept sequences matching the forced-win pattern");
    roll_cmd->add_option("--format", roll_format)->check(CLI::IsMember({"text", "json"}));

    std::string digits;
    std::string classify_format = "text";
    auto* classify_cmd = app.add_subcommand("classify", "Classify a 5-digit sequence");
    classify_cmd->add_option("digits", digits, "Five digits in 0..8, e.g. 61245")->required();
    classify_cmd->add_option("--format", classify_format)->check(CLI::IsMember({"text", "json"}));

    std::string census_format = "table";
    auto* census_cmd = app.add_subcommand("census", "Classify all 59049 sequences");
    census_cmd->add_option("--format", census_format)->check(CLI::IsMember({"table", "json"}));

    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;
    std::string persist;
    auto* serve_cmd = app.add_subcommand("serve", "Run the game service");
    serve_cmd->add_option("--host", host)->envname("U3T_HOST");
    serve_cmd->add_option("--port", port)->envname("U3T_PORT")->check(CLI::Range(0, 65535));
    serve_cmd->add_option("--static-dir", static_dir, "Directory of web UI assets")->envname("U3T_STATIC_DIR");
    serve_cmd->add_option("--persist", persist, "Session log file")->envname("U3T_PERSIST");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        if (code != 0) std::cerr << '\n' << app.help();
        return code;
    }

    if (*roll_cmd) return cmd_roll(seed, allow_forced_win, roll_format);
    if (*classify_cmd) return cmd_classify(digits, classify_format);
    if (*census_cmd) return cmd_census(census_format);
    if (*serve_cmd) return cmd_serve(host, port, static_dir, persist);
    return 1;
}
