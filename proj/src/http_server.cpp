#include "u3t/http_server.hpp"

#include <httplib.h>

#include "u3t/digit_source.hpp"
#include "u3t/wire.hpp"

namespace u3t {

using nlohmann::json;

namespace {

void send_json(httplib::Response& res, const json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

json parse_body(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object()) {
        throw ServiceError(ErrorCode::BadRequest, "request body must be a JSON object");
    }
    return body;
}

std::optional<std::uint64_t> optional_seed(const json& body) {
    auto it = body.find("seed");
    if (it == body.end() || it->is_null()) return std::nullopt;
    // Non-negative integer literals parse as unsigned.
    if (!it->is_number_unsigned()) throw ServiceError(ErrorCode::BadRequest, "seed must be a non-negative integer");
    return it->get<std::uint64_t>();
}

std::optional<std::string> optional_digits(const json& body) {
    auto it = body.find("digits");
    if (it == body.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw ServiceError(ErrorCode::InvalidDigits, "digits must be a string such as \"61245\"");
    return it->get<std::string>();
}

Digit required_digit(const json& body, const char* key) {
    auto it = body.find(key);
    if (it == body.end() || !it->is_number_integer()) {
        throw ServiceError(ErrorCode::BadRequest, std::string(key) + " must be an integer in 0..8");
    }
    const auto v = it->get<std::int64_t>();
    if (v < 0 || v > 8) throw ServiceError(ErrorCode::BadRequest, std::string(key) + " must be an integer in 0..8");
    return Digit(static_cast<int>(v));
}

template <class Handler>
httplib::Server::Handler guarded(Handler handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
        try {
            handler(req, res);
        } catch (const ServiceError& e) {
            send_json(res, e.to_json(), e.http_status());
        } catch (const json::exception& e) {
            send_json(res, ServiceError(ErrorCode::BadRequest, e.what()).to_json(), 400);
        }
    };
}

}  // namespace

HttpServer::HttpServer(GameService& service, std::optional<std::filesystem::path> static_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
    install_routes();
    if (static_dir && !server_->set_mount_point("/", static_dir->string())) {
        throw std::invalid_argument("static directory does not exist: " + static_dir->string());
    }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return server_->bind_to_any_port(host);
    return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::serve() { return server_->listen_after_bind(); }

void HttpServer::stop() {
    if (server_) server_->stop();
}

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

void HttpServer::install_routes() {
    auto& srv = *server_;

    srv.Post("/games", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const json body = parse_body(req);
        const GameSession s = service_.create_game(optional_seed(body), optional_digits(body));
        send_json(res, snapshot_json(s), 201);
    }));

    srv.Get(R"(/games/([0-9a-zA-Z]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
        send_json(res, snapshot_json(service_.get_game(req.matches[1])));
    }));

    srv.Post(R"(/games/([0-9a-zA-Z]+)/moves)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const json body = parse_body(req);
        MoveRequest move{{required_digit(body, "field"), required_digit(body, "spot")}, std::nullopt};
        if (auto it = body.find("expected_version"); it != body.end() && !it->is_null()) {
            if (!it->is_number_integer()) throw ServiceError(ErrorCode::BadRequest, "expected_version must be an integer");
            move.expected_version = it->get<int>();
        }
        send_json(res, snapshot_json(service_.submit_move(req.matches[1], move)));
    }));

    srv.Post("/openings/roll", guarded([](const httplib::Request& req, httplib::Response& res) {
        const json body = parse_body(req);
        RollPolicy policy;
        if (auto it = body.find("allow_forced_win"); it != body.end() && it->is_boolean()) {
            policy.reject_forced_win_pattern = !it->get<bool>();
        }
        SeededDigitSource source(optional_seed(body).value_or(fresh_seed()));
        try {
            const RollResult rolled = roll(source, policy);
            json out = wire::describe_sequence(rolled.seq);
            out["rejected_draws"] = rolled.rejected_draws;
            send_json(res, out);
        } catch (const RetriesExhausted& e) {
            throw ServiceError(ErrorCode::RetriesExhausted, e.what());
        }
    }));

    srv.Post("/openings/classify", guarded([](const httplib::Request& req, httplib::Response& res) {
        const json body = parse_body(req);
        const auto digits = optional_digits(body);
        if (!digits) throw ServiceError(ErrorCode::InvalidDigits, "digits is required");
        const auto seq = DigitSequence::parse(*digits);
        if (!seq) {
            throw ServiceError(ErrorCode::InvalidDigits,
                               "digits must be exactly 5 characters in '0'..'8', got \"" + *digits + "\"");
        }
        send_json(res, wire::describe_sequence(*seq));
    }));

    srv.Get("/census", guarded([this](const httplib::Request&, httplib::Response& res) {
        send_json(res, wire::to_json(service_.get_census()));
    }));
}

}  // namespace u3t
