#include "spg/session.hpp"

#include <cstdio>

#include "spg/dispatch.hpp"
#include "spg/error.hpp"

namespace spg {

namespace {

bool default_hints(const GameGraph& g) {
    const GraphClass c = classify(g);
    return c.is_dag || ((c.is_tree || c.is_cactus || c.is_directed_cactus) && g.vertex_count() <= engine_vertex_limit());
}

} // namespace

Session::Session(std::string id, GameGraph g, SessionOptions options)
    : id_(std::move(id)), g_(std::move(g)), options_(options), state_(initial_state(g_)), history_{g_.source()} {
    hints_ = options_.hints.value_or(default_hints(g_));
    if (classify(g_).is_dag) {
        dag_ = dag_tables(g_);
    } else if (g_.vertex_count() <= engine_vertex_limit()) {
        engine_.emplace(g_);
    }
    while (engine_to_move()) {
        advance(engine_move());
    }
}

bool Session::engine_to_move() const {
    return options_.mode == SessionMode::HumanVsEngine && !is_terminal(g_, state_) &&
           state_.mover() != options_.human;
}

VertexId Session::engine_move() {
    if (dag_) {
        return dag_->choice[state_.current];
    }
    if (engine_) {
        return engine_->choice(state_);
    }
    return low_memory_continuation(g_, state_).second.at(1);
}

void Session::advance(VertexId next) {
    state_ = apply_move(g_, state_, next);
    history_.push_back(next);
}

std::vector<std::pair<Move, CostPair>> Session::move_values() {
    if (engine_) {
        return engine_->what_if(state_).options;
    }
    std::vector<std::pair<Move, CostPair>> out;
    for (const Move& m : legal_moves(g_, state_)) {
        CostPair after;
        if (dag_) {
            after = {dag_->p_d[m.next], dag_->p_f[m.next]};
        } else {
            after = low_memory_continuation(g_, apply_move(g_, state_, m.next)).first;
        }
        out.emplace_back(m, after_move(m.edge.cost, after));
    }
    return out;
}

nlohmann::ordered_json Session::view() {
    nlohmann::ordered_json out;
    out["id"] = id_;
    out["mode"] = options_.mode == SessionMode::HumanVsEngine ? "human-vs-engine" : "human-vs-human";
    if (options_.mode == SessionMode::HumanVsEngine) {
        out["human"] = std::string(1, player_name(options_.human));
    }
    out["hints"] = hints_;
    out["state"] = state_json(g_, state_);
    out["history"] = history_;
    out["history_labels"] = walk_labels(g_, history_);
    auto& moves = out["legal_moves"] = nlohmann::ordered_json::array();
    if (is_terminal(g_, state_)) {
        return out;
    }
    std::vector<std::pair<Move, CostPair>> options;
    if (hints_) {
        options = move_values();
    } else {
        for (const Move& m : legal_moves(g_, state_)) {
            options.emplace_back(m, CostPair::top());
        }
    }
    const bool a_moves = state_.mover() == Player::A;
    for (const auto& [m, pair] : options) {
        nlohmann::ordered_json entry;
        entry["to"] = m.next;
        entry["label"] = g_.name(m.next);
        entry["cost"] = m.edge.cost;
        if (hints_) {
            entry["what_if"] = cost_pair_json(pair);
            const CostValue mover_total = CostValue(a_moves ? state_.cost_a : state_.cost_b) + pair.decider;
            const CostValue other_total = CostValue(a_moves ? state_.cost_b : state_.cost_a) + pair.follower;
            entry["final"] = {{"A", (a_moves ? mover_total : other_total).value()},
                              {"B", (a_moves ? other_total : mover_total).value()}};
        }
        moves.push_back(std::move(entry));
    }
    return out;
}

void Session::play(VertexId next, std::optional<Player> as) {
    if (is_terminal(g_, state_)) {
        throw ApiError(409, "GameOver", "the game has already reached t");
    }
    if (as && *as != state_.mover()) {
        throw ApiError(409, "OutOfTurn", std::string("it is ") + player_name(state_.mover()) + "'s turn");
    }
    if (engine_to_move()) {
        throw ApiError(409, "OutOfTurn", "it is the engine's turn");
    }
    if (next >= g_.vertex_count()) {
        throw ApiError(400, "IllegalMove", "unknown vertex " + std::to_string(next), to_string(Rule::NotAnEdge).data());
    }
    if (const auto rule = violated_rule(g_, state_, next)) {
        throw ApiError(400, "IllegalMove",
                       "move " + g_.name(state_.current) + "->" + g_.name(next) + " violates " +
                           std::string(to_string(*rule)),
                       std::string(to_string(*rule)));
    }
    advance(next);
    while (engine_to_move()) {
        advance(engine_move());
    }
}

SessionStore::SessionStore(std::chrono::seconds ttl) : ttl_(ttl), rng_(std::random_device{}()) {}

std::string SessionStore::fresh_id() {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
    return buf;
}

std::shared_ptr<Session> SessionStore::create(GameGraph g, SessionOptions options) {
    std::string id;
    {
        std::lock_guard lock(mutex_);
        do {
            id = fresh_id();
        } while (sessions_.contains(id));
    }
    auto session = std::make_shared<Session>(id, std::move(g), options);
    std::lock_guard lock(mutex_);
    sessions_[id] = {session, Clock::now()};
    return session;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) {
        return nullptr;
    }
    const auto now = Clock::now();
    if (now - it->second.last_used > ttl_) {
        sessions_.erase(it);
        return nullptr;
    }
    it->second.last_used = now;
    return it->second.session;
}

bool SessionStore::erase(const std::string& id) {
    std::lock_guard lock(mutex_);
    return sessions_.erase(id) > 0;
}

std::size_t SessionStore::sweep() {
    std::lock_guard lock(mutex_);
    const auto now = Clock::now();
    return std::erase_if(sessions_, [&](const auto& kv) { return now - kv.second.last_used > ttl_; });
}

std::size_t SessionStore::size() {
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

} // namespace spg
