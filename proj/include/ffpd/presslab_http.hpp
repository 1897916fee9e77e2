#pragma once

// HTTP transport for SessionStore (cpp-httplib).

#include "presslab.hpp"

#include <httplib.h>

#include <string>

namespace ffpd {

class PressLabServer {
public:
    /// `allow_origin` empty disables CORS headers.
    PressLabServer(SessionStore& store, std::string allow_origin = {}) : store_(store), origin_(std::move(allow_origin)) {
        auto handler = [this](const httplib::Request& req, httplib::Response& res) {
            auto r = store_.handle(req.method, req.path, req.body);
            res.status = r.status;
            if (r.status != 204) res.set_content(r.body.dump(), "application/json");
            add_cors(res);
        };
        const char* pattern = R"(/.*)";
        server_.Get(pattern, handler);
        server_.Post(pattern, handler);
        server_.Delete(pattern, handler);
        server_.Put(pattern, handler);
        server_.Options(pattern, [this](const httplib::Request&, httplib::Response& res) {
            res.status = 204;
            add_cors(res);
        });
    }

    /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
    int bind(const std::string& host, int port) {
        if (port == 0) return server_.bind_to_any_port(host);
        return server_.bind_to_port(host, port) ? port : -1;
    }

    /// Blocks serving requests until stop().
    bool listen() { return server_.listen_after_bind(); }

    void wait_until_ready() const { server_.wait_until_ready(); }
    void stop() { server_.stop(); }

private:
    void add_cors(httplib::Response& res) const {
        if (origin_.empty()) return;
        res.set_header("Access-Control-Allow-Origin", origin_);
        res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }

    SessionStore& store_;
    std::string origin_;
    httplib::Server server_;
};

} // namespace ffpd
