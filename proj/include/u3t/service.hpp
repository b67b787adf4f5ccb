#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "u3t/census.hpp"
#include "u3t/core_rules.hpp"
#include "u3t/opening.hpp"

namespace u3t {

struct GameSession {
    std::string id;
    DigitSequence seq;
    BoardState state;
    GameStatus status;
    std::chrono::system_clock::time_point created_at;
    int version = 0;  // == state.move_count
};

struct MoveRequest {
    SpotRef at;
    std::optional<int> expected_version;
};

enum class ErrorCode {
    BadRequest,
    InvalidDigits,
    UnplayableDigits,
    NotFound,
    VersionConflict,
    IllegalMove,
    RetriesExhausted,
};

std::string_view to_string(ErrorCode code) noexcept;  // "NOT_FOUND" etc.

class ServiceError : public std::runtime_error {
public:
    ServiceError(ErrorCode code, const std::string& message, nlohmann::json details = nullptr)
        : std::runtime_error(message), code_(code), details_(std::move(details)) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const nlohmann::json& details() const noexcept { return details_; }
    [[nodiscard]] int http_status() const noexcept;
    // {"error": {"code": ..., "message": ..., "details"?: ...}}
    [[nodiscard]] nlohmann::json to_json() const;

private:
    ErrorCode code_;
    nlohmann::json details_;
};

// Rebuilds a board from its opening sequence plus the moves played after
// it. Throws IllegalMove or std::invalid_argument if the history does not
// replay.
[[nodiscard]] BoardState replay(const DigitSequence& seq, const std::vector<SpotRef>& moves_after_opening);

// Wire snapshot: id, seq, board (81 chars), to_move, forced_field, status,
// field_status, legal_moves, version, move_count, history, created_at.
[[nodiscard]] nlohmann::json snapshot_json(const GameSession& session);

// In-memory session store. Requests on different sessions run
// independently; mutations of one session are serialized.
//
// With a persistence path, every mutation appends one JSON line holding the
// session's sequence and move history. On load the last line per id wins and
// each session is rebuilt by replay. flush() compacts the file to one line
// per session.
class GameService {
public:
    explicit GameService(std::optional<std::filesystem::path> persist_path = std::nullopt);
    ~GameService();

    GameService(const GameService&) = delete;
    GameService& operator=(const GameService&) = delete;

    GameSession create_game(std::optional<std::uint64_t> seed, std::optional<std::string> digits);
    [[nodiscard]] GameSession get_game(const std::string& id) const;
    GameSession submit_move(const std::string& id, const MoveRequest& request);
    [[nodiscard]] const CensusReport& get_census() const { return census(); }

    [[nodiscard]] std::size_t session_count() const;
    void flush();

private:
    struct Entry {
        mutable std::mutex mutex;
        GameSession session;
    };

    [[nodiscard]] std::shared_ptr<Entry> find(const std::string& id) const;
    GameSession insert(DigitSequence seq, BoardState board);
    void append_record(const GameSession& session);
    void load();

    mutable std::shared_mutex sessions_mutex_;
    std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
    std::optional<std::filesystem::path> persist_path_;
    std::mutex file_mutex_;
};

}  // namespace u3t
