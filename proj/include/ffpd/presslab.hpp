#pragma once

// Session service behind the interactive pressing explorer: an in-memory
// store of PressSessions plus a transport-independent request dispatcher.
// presslab_http.hpp puts it on the wire.
//
// Routes (vertices are 1-based on the wire):
//   POST   /sessions                 graph JSON         -> 201 {id, state}
//   GET    /sessions/{id}                               -> state
//   POST   /sessions/{id}/press      {"vertex": i}      -> state | 409
//   POST   /sessions/{id}/undo                          -> state | 409
//   GET    /sessions/{id}/analysis                      -> {pressable, some_order, pd_in_current_order}
//   DELETE /sessions/{id}                               -> 204
// state = {graph, log, pressable, finished}. Errors are {"error": kind, "message": text}.

#include "json_io.hpp"
#include "pressing.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ffpd {

struct ApiResponse {
    int status = 200;
    ordered_json body; // null for 204
};

class SessionStore {
public:
    using Clock = std::chrono::steady_clock;

    struct Options {
        std::chrono::seconds ttl{24 * 60 * 60};
        std::optional<std::filesystem::path> snapshot_dir;
        FindOrderOptions search{};
        std::function<Clock::time_point()> now = [] { return Clock::now(); };
    };

    SessionStore() : SessionStore(Options{}) {}

    explicit SessionStore(Options opts) : opts_(std::move(opts)), rng_(std::random_device{}()) {
        if (opts_.snapshot_dir) {
            std::filesystem::create_directories(*opts_.snapshot_dir);
            load_snapshots();
        }
    }

    const Options& options() const noexcept { return opts_; }

    /// Dispatches one request. `body` is the raw request body.
    ApiResponse handle(const std::string& method, const std::string& path, const std::string& body) {
        try {
            return route(method, path, body);
        } catch (const Error& e) {
            return error_response(status_for(e.kind()), std::string(e.name()), e.what());
        } catch (const nlohmann::json::exception& e) {
            return error_response(400, "ParseError", e.what());
        }
    }

    std::size_t size() {
        std::lock_guard lock(mu_);
        return sessions_.size();
    }

    /// Drops sessions idle for longer than the TTL (and their snapshots).
    void purge_expired() {
        std::lock_guard lock(mu_);
        const auto now = opts_.now();
        for (auto it = sessions_.begin(); it != sessions_.end();) {
            if (expired(*it->second, now)) {
                remove_snapshot(it->first);
                it = sessions_.erase(it);
            } else {
                ++it;
            }
        }
    }

    static ordered_json state_json(const PressSession& s) {
        ordered_json j;
        j["graph"] = graph_to_json(s.current());
        j["log"] = one_based(s.log());
        j["pressable"] = one_based(s.pressable());
        j["finished"] = s.finished();
        return j;
    }

    static ordered_json analysis_json(const SessionAnalysis& a) {
        ordered_json j;
        j["pressable"] = one_based(a.pressable);
        switch (a.some_order.kind) {
        case SomeOrder::Kind::Found: j["some_order"] = one_based(a.some_order.order); break;
        case SomeOrder::Kind::None: j["some_order"] = nullptr; break;
        case SomeOrder::Kind::TooLarge: j["some_order"] = "too-large"; break;
        }
        j["pd_in_current_order"] = a.pd_in_current_order;
        return j;
    }

private:
    struct Entry {
        explicit Entry(PressSession s) : session(std::move(s)) {}
        std::mutex mu;
        PressSession session;
        Clock::time_point last_used{};
        std::optional<std::pair<std::vector<std::size_t>, ordered_json>> analysis; // keyed by log
    };

    static ordered_json one_based(const std::vector<std::size_t>& vs) {
        ordered_json a = ordered_json::array();
        for (auto v : vs) a.push_back(v + 1);
        return a;
    }

    static ApiResponse error_response(int status, const std::string& kind, const std::string& message) {
        ordered_json j;
        j["error"] = kind;
        j["message"] = message;
        return {status, std::move(j)};
    }

    static int status_for(ErrorKind k) {
        switch (k) {
        case ErrorKind::ParseError: return 400;
        case ErrorKind::NonPositiveLoop:
        case ErrorKind::NothingToUndo: return 409;
        default: return 422;
        }
    }

    bool expired(const Entry& e, Clock::time_point now) const { return now - e.last_used > opts_.ttl; }

    std::string new_id() {
        std::ostringstream s;
        s << std::hex;
        for (int i = 0; i < 2; ++i) {
            auto word = rng_();
            for (int b = 60; b >= 0; b -= 4) s << ((word >> b) & 0xf);
        }
        return s.str();
    }

    std::shared_ptr<Entry> lookup(const std::string& id) {
        std::lock_guard lock(mu_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) return nullptr;
        const auto now = opts_.now();
        if (expired(*it->second, now)) {
            remove_snapshot(id);
            sessions_.erase(it);
            return nullptr;
        }
        it->second->last_used = now;
        return it->second;
    }

    // --- snapshots ---------------------------------------------------------

    std::filesystem::path snapshot_path(const std::string& id) const { return *opts_.snapshot_dir / (id + ".json"); }

    void write_snapshot(const PressSession& s) const {
        if (!opts_.snapshot_dir) return;
        ordered_json j;
        j["id"] = s.id();
        j["graph"] = graph_to_json(s.initial());
        j["log"] = one_based(s.log());
        const auto path = snapshot_path(s.id());
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, path);
    }

    void remove_snapshot(const std::string& id) const {
        if (!opts_.snapshot_dir) return;
        std::error_code ec;
        std::filesystem::remove(snapshot_path(id), ec);
    }

    void load_snapshots() {
        for (const auto& file : std::filesystem::directory_iterator(*opts_.snapshot_dir)) {
            if (file.path().extension() != ".json") continue;
            try {
                const auto j = load_json_file(file.path().string());
                auto s = session_from_snapshot(j);
                auto entry = std::make_shared<Entry>(std::move(s));
                entry->last_used = opts_.now();
                sessions_.emplace(entry->session.id(), std::move(entry));
            } catch (const std::exception&) {
                // Unreadable snapshots are skipped rather than aborting startup.
            }
        }
    }

public:
    /// Rebuilds a session from its snapshot by replaying the press log.
    static PressSession session_from_snapshot(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("id") || !j.at("id").is_string()) throw Error(ErrorKind::ParseError, "snapshot needs an id");
        PressSession s(graph_from_json(detail::require_key(j, "graph")), j.at("id").get<std::string>());
        if (j.contains("log")) {
            for (const auto& v : j.at("log")) s.press(detail::vertex_from_json(v, s.initial().n()));
        }
        return s;
    }

private:
    // --- routing -----------------------------------------------------------

    static std::vector<std::string> split_path(const std::string& path) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : path.substr(0, path.find('?'))) {
            if (c == '/') {
                if (!cur.empty()) parts.push_back(std::move(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) parts.push_back(std::move(cur));
        return parts;
    }

    static ApiResponse not_found(const std::string& what) { return error_response(404, "NotFound", what); }

    static ApiResponse method_not_allowed(const std::string& method, const std::string& path) {
        return error_response(405, "MethodNotAllowed", method + " " + path);
    }

    ApiResponse route(const std::string& method, const std::string& path, const std::string& body) {
        const auto parts = split_path(path);
        if (parts.empty() || parts[0] != "sessions" || parts.size() > 3) return not_found("no route for " + path);

        if (parts.size() == 1) {
            if (method != "POST") return method_not_allowed(method, path);
            return create(body);
        }

        const auto& id = parts[1];
        if (parts.size() == 2 && method == "DELETE") {
            std::lock_guard lock(mu_);
            if (sessions_.erase(id) == 0) return not_found("unknown session " + id);
            remove_snapshot(id);
            return {204, nullptr};
        }

        auto entry = lookup(id);
        if (!entry) return not_found("unknown session " + id);
        std::lock_guard lock(entry->mu);
        auto& s = entry->session;

        if (parts.size() == 2) {
            if (method != "GET") return method_not_allowed(method, path);
            return {200, state_json(s)};
        }
        const auto& action = parts[2];
        if (action == "press") {
            if (method != "POST") return method_not_allowed(method, path);
            const auto j = parse_json_text(body);
            if (!j.is_object() || !j.contains("vertex")) throw Error(ErrorKind::ParseError, "body must be {\"vertex\": i}");
            s.press(detail::vertex_from_json(j.at("vertex"), s.current().n()));
            write_snapshot(s);
            return {200, state_json(s)};
        }
        if (action == "undo") {
            if (method != "POST") return method_not_allowed(method, path);
            s.undo();
            write_snapshot(s);
            return {200, state_json(s)};
        }
        if (action == "analysis") {
            if (method != "GET") return method_not_allowed(method, path);
            if (!entry->analysis || entry->analysis->first != s.log()) {
                entry->analysis.emplace(s.log(), analysis_json(s.analyze(opts_.search)));
            }
            return {200, entry->analysis->second};
        }
        return not_found("no route for " + path);
    }

    ApiResponse create(const std::string& body) {
        auto j = parse_json_text(body);
        if (j.is_object() && j.contains("graph")) j = j.at("graph");
        auto g = graph_from_json(j);
        std::shared_ptr<Entry> entry;
        {
            std::lock_guard lock(mu_);
            std::string id;
            do {
                id = new_id();
            } while (sessions_.contains(id));
            entry = std::make_shared<Entry>(PressSession(std::move(g), id));
            entry->last_used = opts_.now();
            sessions_.emplace(id, entry);
        }
        std::lock_guard lock(entry->mu);
        write_snapshot(entry->session);
        ordered_json out;
        out["id"] = entry->session.id();
        out["state"] = state_json(entry->session);
        return {201, std::move(out)};
    }

    Options opts_;
    std::mutex mu_;
    std::mt19937_64 rng_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

} // namespace ffpd
