#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "u3t/service.hpp"

namespace httplib {
class Server;
}

namespace u3t {

// HTTP binding of GameService.
//
//   POST /games                {"seed": n} | {"digits": "61245"} | {}
//   GET  /games/{id}
//   POST /games/{id}/moves     {"field": f, "spot": s, "expected_version"?: v}
//   POST /openings/roll        {"seed"?: n, "allow_forced_win"?: bool}
//   POST /openings/classify    {"digits": "44148"}
//   GET  /census
//
// Errors are {"error": {"code", "message", "details"?}} with a 4xx/5xx status.
class HttpServer {
public:
    explicit HttpServer(GameService& service, std::optional<std::filesystem::path> static_dir = std::nullopt);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    // Returns the bound port (useful with port 0), or -1 on failure.
    int bind(const std::string& host, int port);
    // Blocks until stop() is called. Returns false if the loop failed.
    bool serve();
    void stop();
    void wait_until_ready() const;

private:
    void install_routes();

    GameService& service_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace u3t
