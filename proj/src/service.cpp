#include "u3t/service.hpp"

#include <ctime>
#include <fstream>
#include <iostream>
#include <random>

#include "u3t/digit_source.hpp"
#include "u3t/wire.hpp"

namespace u3t {

using nlohmann::json;

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::BadRequest: return "BAD_REQUEST";
        case ErrorCode::InvalidDigits: return "INVALID_DIGITS";
        case ErrorCode::UnplayableDigits: return "UNPLAYABLE_DIGITS";
        case ErrorCode::NotFound: return "NOT_FOUND";
        case ErrorCode::VersionConflict: return "VERSION_CONFLICT";
        case ErrorCode::IllegalMove: return "ILLEGAL_MOVE";
        case ErrorCode::RetriesExhausted: return "RETRIES_EXHAUSTED";
    }
    return "INTERNAL";
}

int ServiceError::http_status() const noexcept {
    switch (code_) {
        case ErrorCode::NotFound: return 404;
        case ErrorCode::VersionConflict: return 409;
        case ErrorCode::UnplayableDigits:
        case ErrorCode::IllegalMove: return 422;
        case ErrorCode::RetriesExhausted: return 503;
        default: return 400;
    }
}

json ServiceError::to_json() const {
    json err = {{"code", std::string(to_string(code_))}, {"message", what()}};
    if (!details_.is_null()) err["details"] = details_;
    return {{"error", err}};
}

namespace {

std::string new_session_id() {
    static thread_local std::random_device rd;
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 4; ++i) {
        std::uint32_t word = rd();
        for (int k = 0; k < 8; ++k) {
            id.push_back(kHex[word & 0xF]);
            word >>= 4;
        }
    }
    return id;
}

std::string iso8601(std::chrono::system_clock::time_point tp) {
    const std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::int64_t epoch_millis(std::chrono::system_clock::time_point tp) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(tp.time_since_epoch()).count();
}

json record_json(const GameSession& s) {
    json moves = json::array();
    for (std::size_t i = 4; i < s.state.history.size(); ++i) {
        const SpotRef at = s.state.history[i].at;
        moves.push_back({at.field.value(), at.spot.value()});
    }
    return {{"id", s.id}, {"seq", s.seq.to_string()}, {"created_at_ms", epoch_millis(s.created_at)}, {"moves", moves}};
}

GameSession session_from_record(const json& rec) {
    auto seq = DigitSequence::parse(rec.at("seq").get<std::string>());
    if (!seq) throw std::invalid_argument("bad seq in record");
    std::vector<SpotRef> moves;
    for (const auto& m : rec.at("moves")) {
        moves.push_back({Digit(m.at(0).get<int>()), Digit(m.at(1).get<int>())});
    }
    GameSession s{
        .id = rec.at("id").get<std::string>(),
        .seq = *seq,
        .state = replay(*seq, moves),
        .status = {},
        .created_at = std::chrono::system_clock::time_point(
            std::chrono::milliseconds(rec.at("created_at_ms").get<std::int64_t>())),
        .version = 0,
    };
    s.status = game_status(s.state);
    s.version = s.state.move_count;
    return s;
}

}  // namespace

BoardState replay(const DigitSequence& seq, const std::vector<SpotRef>& moves_after_opening) {
    auto applied = apply_opening(seq);
    if (std::holds_alternative<Illegal>(applied)) {
        throw std::invalid_argument("sequence " + seq.to_string() + " is not a legal opening");
    }
    BoardState board = std::get<BoardState>(std::move(applied));
    for (const SpotRef& at : moves_after_opening) board = apply_move(board, at);
    return board;
}

json snapshot_json(const GameSession& s) {
    const std::string text = serialize(s.state);
    json field_status = json::array();
    for (const auto& f : s.state.fields) {
        switch (f.status) {
            case FieldStatus::Open: field_status.push_back("open"); break;
            case FieldStatus::WonByX: field_status.push_back("x"); break;
            case FieldStatus::WonByO: field_status.push_back("o"); break;
            case FieldStatus::Drawn: field_status.push_back("drawn"); break;
        }
    }
    json legal = json::array();
    for (const SpotRef& at : legal_moves(s.state)) legal.push_back(wire::to_json(at));
    json history = json::array();
    for (const Placement& p : s.state.history) history.push_back(wire::to_json(p));

    return {
        {"id", s.id},
        {"seq", s.seq.to_string()},
        {"board", text.substr(0, 81)},
        {"to_move", std::string(1, to_char(s.state.to_move))},
        {"forced_field", s.state.forced_field ? json(s.state.forced_field->value()) : json(nullptr)},
        {"status", wire::to_json(s.status)},
        {"field_status", field_status},
        {"legal_moves", legal},
        {"version", s.version},
        {"move_count", s.state.move_count},
        {"history", history},
        {"created_at", iso8601(s.created_at)},
    };
}

GameService::GameService(std::optional<std::filesystem::path> persist_path)
    : persist_path_(std::move(persist_path)) {
    if (persist_path_) load();
}

GameService::~GameService() {
    try {
        flush();
    } catch (const std::exception& e) {
        std::cerr << "failed to flush sessions: " << e.what() << '\n';
    }
}

GameSession GameService::create_game(std::optional<std::uint64_t> seed, std::optional<std::string> digits) {
    if (seed && digits) throw ServiceError(ErrorCode::BadRequest, "supply at most one of seed and digits");

    if (digits) {
        auto seq = DigitSequence::parse(*digits);
        if (!seq) {
            throw ServiceError(ErrorCode::InvalidDigits,
                               "digits must be exactly 5 characters in '0'..'8', got \"" + *digits + "\"");
        }
        const OpeningClass cls = classify(*seq);
        if (cls.kind != OpeningClass::Kind::Playable) {
            throw ServiceError(ErrorCode::UnplayableDigits,
                               seq->to_string() + " is not a playable opening: " + to_string(cls),
                               wire::to_json(cls));
        }
        return insert(*seq, std::get<BoardState>(apply_opening(*seq)));
    }

    SeededDigitSource source(seed.value_or(fresh_seed()));
    try {
        RollResult rolled = roll(source);
        return insert(rolled.seq, std::move(rolled.board));
    } catch (const RetriesExhausted& e) {
        throw ServiceError(ErrorCode::RetriesExhausted, e.what());
    }
}

GameSession GameService::get_game(const std::string& id) const {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    return entry->session;
}

GameSession GameService::submit_move(const std::string& id, const MoveRequest& request) {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    GameSession& s = entry->session;
    if (request.expected_version && *request.expected_version != s.version) {
        throw ServiceError(ErrorCode::VersionConflict,
                           "expected version " + std::to_string(*request.expected_version) + " but session is at " +
                               std::to_string(s.version),
                           json{{"current_version", s.version}});
    }
    try {
        s.state = apply_move(s.state, request.at);
    } catch (const IllegalMove& e) {
        throw ServiceError(ErrorCode::IllegalMove, e.what(), json{{"reason", std::string(to_string(e.reason()))}});
    }
    s.status = game_status(s.state);
    s.version = s.state.move_count;
    append_record(s);
    return s;
}

std::size_t GameService::session_count() const {
    std::shared_lock lock(sessions_mutex_);
    return sessions_.size();
}

std::shared_ptr<GameService::Entry> GameService::find(const std::string& id) const {
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ServiceError(ErrorCode::NotFound, "no game with id \"" + id + "\"");
    return it->second;
}

GameSession GameService::insert(DigitSequence seq, BoardState board) {
    auto entry = std::make_shared<Entry>();
    entry->session = GameSession{
        .id = new_session_id(),
        .seq = seq,
        .state = std::move(board),
        .status = {},
        .created_at = std::chrono::system_clock::now(),
        .version = 0,
    };
    GameSession& s = entry->session;
    s.status = game_status(s.state);
    s.version = s.state.move_count;
    {
        std::unique_lock lock(sessions_mutex_);
        while (sessions_.contains(s.id)) s.id = new_session_id();
        sessions_.emplace(s.id, entry);
    }
    append_record(s);
    return s;
}

void GameService::append_record(const GameSession& session) {
    if (!persist_path_) return;
    const std::string line = record_json(session).dump();
    std::lock_guard lock(file_mutex_);
    std::ofstream out(*persist_path_, std::ios::app);
    out << line << '\n';
    if (!out) throw std::runtime_error("cannot append to " + persist_path_->string());
}

void GameService::load() {
    std::ifstream in(*persist_path_);
    if (!in) return;
    std::unordered_map<std::string, json> latest;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            json rec = json::parse(line);
            const auto id = rec.at("id").get<std::string>();
            latest[id] = std::move(rec);
        } catch (const std::exception& e) {
            std::cerr << persist_path_->string() << ':' << line_no << ": skipping record: " << e.what() << '\n';
        }
    }
    for (auto& [id, rec] : latest) {
        try {
            auto entry = std::make_shared<Entry>();
            entry->session = session_from_record(rec);
            sessions_.emplace(id, std::move(entry));
        } catch (const std::exception& e) {
            std::cerr << "session " << id << " does not replay, dropped: " << e.what() << '\n';
        }
    }
}

void GameService::flush() {
    if (!persist_path_) return;
    std::vector<json> records;
    {
        std::shared_lock lock(sessions_mutex_);
        for (const auto& [id, entry] : sessions_) {
            std::lock_guard entry_lock(entry->mutex);
            records.push_back(record_json(entry->session));
        }
    }
    std::lock_guard lock(file_mutex_);
    const auto tmp = std::filesystem::path(persist_path_->string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        for (const auto& rec : records) out << rec.dump() << '\n';
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, *persist_path_);
}

}  // namespace u3t
