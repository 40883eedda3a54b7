#include "spg/http_api.hpp"

#include "httplib.h"
#include "spg/dispatch.hpp"
#include "spg/error.hpp"
#include "spg/io.hpp"

namespace spg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void send(httplib::Response& res, int status, const ordered_json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message,
                const std::string& rule = {}) {
    ordered_json body{{"error", code}, {"message", message}};
    if (!rule.empty()) {
        body["rule"] = rule;
    }
    send(res, status, body);
}

json parse_body(const httplib::Request& req) {
    try {
        return json::parse(req.body);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
    }
}

// Accepts a bare graph document or an object with a "graph" member.
const json& graph_member(const json& body) {
    if (body.is_object() && body.contains("graph")) {
        return body["graph"];
    }
    return body;
}

template <typename Handler>
void guarded(httplib::Response& res, Handler&& handler) {
    try {
        handler();
    } catch (const ApiError& e) {
        send_error(res, e.status(), e.code(), e.what(), e.rule());
    } catch (const Error& e) {
        std::string rule;
        if (e.code() == ErrorCode::IllegalMove) {
            const std::string what = e.what();
            rule = what.find("R2") != std::string::npos ? "R2" : what.find("R1") != std::string::npos ? "R1" : "";
        }
        send_error(res, 400, std::string(to_string(e.code())), e.what(), rule);
    } catch (const json::exception& e) {
        send_error(res, 400, "SchemaError", e.what());
    }
}

std::optional<Player> player_field(const json& body, const char* field) {
    if (!body.is_object() || !body.contains(field)) {
        return std::nullopt;
    }
    const std::string name = body.at(field).get<std::string>();
    if (name == "A") {
        return Player::A;
    }
    if (name == "B") {
        return Player::B;
    }
    throw ApiError(400, "SchemaError", std::string("field '") + field + "': expected \"A\" or \"B\"");
}

SessionOptions session_options(const json& body) {
    SessionOptions options;
    if (!body.is_object() || !body.contains("graph")) {
        return options;
    }
    const std::string mode = body.value("mode", "human-vs-engine");
    if (mode == "human-vs-human") {
        options.mode = SessionMode::HumanVsHuman;
    } else if (mode != "human-vs-engine") {
        throw ApiError(400, "SchemaError", "field 'mode': expected human-vs-engine or human-vs-human");
    }
    options.human = player_field(body, "human").value_or(Player::A);
    if (body.contains("hints")) {
        options.hints = body.at("hints").get<bool>();
    }
    return options;
}

VertexId move_target(const Session& session, const json& body) {
    if (!body.is_object()) {
        throw ApiError(400, "SchemaError", "expected an object with 'to'");
    }
    if (body.contains("to")) {
        return body.at("to").get<VertexId>();
    }
    if (body.contains("label")) {
        const std::string label = body.at("label").get<std::string>();
        const GameGraph& g = session.graph();
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.name(v) == label) {
                return v;
            }
        }
        throw ApiError(400, "IllegalMove", "unknown vertex '" + label + "'", std::string(to_string(Rule::NotAnEdge)));
    }
    throw ApiError(400, "SchemaError", "field 'to': missing");
}

std::shared_ptr<Session> lookup(SessionStore& store, const httplib::Request& req) {
    auto session = store.find(req.matches[1]);
    if (!session) {
        throw ApiError(404, "UnknownSession", "no session '" + std::string(req.matches[1]) + "'");
    }
    return session;
}

} // namespace

void install_api(httplib::Server& server, SessionStore& store) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });

    server.Get("/api/health", [&store](const httplib::Request&, httplib::Response& res) {
        send(res, 200, {{"status", "ok"}, {"sessions", store.size()}});
    });

    server.Post("/api/solve", [](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const json body = parse_body(req);
            std::string name = req.has_param("algorithm") ? req.get_param_value("algorithm") : "auto";
            if (body.is_object() && body.contains("algorithm")) {
                name = body["algorithm"].get<std::string>();
            }
            const GameGraph g = GameGraph::load(graph_from_json(graph_member(body)));
            const Solution sol = solve_with(g, parse_algorithm(name));
            send(res, 200, solution_json(g, sol));
        });
    });

    server.Post("/api/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            store.sweep();
            const json body = parse_body(req);
            const SessionOptions options = session_options(body);
            GameGraph g = GameGraph::load(graph_from_json(graph_member(body)));
            auto session = store.create(std::move(g), options);
            std::lock_guard lock(session->mutex());
            send(res, 201, session->view());
        });
    });

    server.Get(R"(/api/sessions/([0-9a-f]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            auto session = lookup(store, req);
            std::lock_guard lock(session->mutex());
            send(res, 200, session->view());
        });
    });

    server.Post(R"(/api/sessions/([0-9a-f]+)/moves)", [&store](const httplib::Request& req,
                                                             httplib::Response& res) {
        guarded(res, [&] {
            auto session = lookup(store, req);
            const json body = parse_body(req);
            std::lock_guard lock(session->mutex());
            session->play(move_target(*session, body), player_field(body, "player"));
            send(res, 200, session->view());
        });
    });

    server.Delete(R"(/api/sessions/([0-9a-f]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            if (!store.erase(req.matches[1])) {
                throw ApiError(404, "UnknownSession", "no session '" + std::string(req.matches[1]) + "'");
            }
            res.status = 204;
        });
    });
}

} // namespace spg
