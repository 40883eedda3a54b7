#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "spg/dag.hpp"
#include "spg/engine.hpp"
#include "spg/game.hpp"
#include "spg/graph.hpp"

namespace spg {

// Failure of a session request, carrying its HTTP status.
class ApiError : public std::runtime_error {
  public:
    ApiError(int status, std::string code, const std::string& message, std::string rule = {})
        : std::runtime_error(message), status_(status), code_(std::move(code)), rule_(std::move(rule)) {}

    [[nodiscard]] int status() const { return status_; }
    [[nodiscard]] const std::string& code() const { return code_; }
    [[nodiscard]] const std::string& rule() const { return rule_; }

  private:
    int status_;
    std::string code_;
    std::string rule_;
};

enum class SessionMode { HumanVsEngine, HumanVsHuman };

struct SessionOptions {
    SessionMode mode = SessionMode::HumanVsEngine;
    Player human = Player::A;
    // Unset: on for DAGs, and for cacti within the engine's memo limit.
    std::optional<bool> hints;
};

// One game in progress.  Callers serialize access through mutex().
class Session {
  public:
    Session(std::string id, GameGraph g, SessionOptions options);

    [[nodiscard]] const std::string& id() const { return id_; }
    [[nodiscard]] const GameGraph& graph() const { return g_; }
    [[nodiscard]] const GameState& state() const { return state_; }
    [[nodiscard]] const std::vector<VertexId>& history() const { return history_; }
    [[nodiscard]] bool hints_enabled() const { return hints_; }
    std::mutex& mutex() { return mutex_; }

    nlohmann::ordered_json view();
    // Applies a human move and any engine reply.  as, when given, must be the
    // player to move.
    void play(VertexId next, std::optional<Player> as = std::nullopt);

  private:
    [[nodiscard]] bool engine_to_move() const;
    VertexId engine_move();
    std::vector<std::pair<Move, CostPair>> move_values();
    void advance(VertexId next);

    std::string id_;
    GameGraph g_;
    SessionOptions options_;
    GameState state_;
    std::vector<VertexId> history_;
    bool hints_ = false;
    std::optional<DagTables> dag_;
    std::optional<Engine> engine_;
    std::mutex mutex_;
};

// In-memory sessions with an idle timeout.
class SessionStore {
  public:
    explicit SessionStore(std::chrono::seconds ttl = std::chrono::minutes(30));

    std::shared_ptr<Session> create(GameGraph g, SessionOptions options);
    // nullptr for unknown or expired ids; refreshes the idle timer.
    std::shared_ptr<Session> find(const std::string& id);
    bool erase(const std::string& id);
    // Drops expired sessions; returns how many were removed.
    std::size_t sweep();
    std::size_t size();

  private:
    using Clock = std::chrono::steady_clock;
    struct Entry {
        std::shared_ptr<Session> session;
        Clock::time_point last_used;
    };

    std::string fresh_id();

    std::chrono::seconds ttl_;
    std::mutex mutex_;
    std::unordered_map<std::string, Entry> sessions_;
    std::mt19937_64 rng_;
};

} // namespace spg
