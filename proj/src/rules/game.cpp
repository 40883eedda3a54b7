#include "spg/game.hpp"

#include <bit>

#include "spg/error.hpp"

namespace spg {

char player_name(Player p) { return p == Player::A ? 'A' : 'B'; }

std::size_t VisitedSet::size() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::string_view to_string(Rule r) {
    switch (r) {
    case Rule::NotAnEdge: return "edge";
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    }
    return "?";
}

GameState initial_state(const GameGraph& g) {
    GameState state;
    state.current = g.source();
    state.visited = VisitedSet(g.vertex_count());
    state.visited.insert(g.source(), 0);
    return state;
}

bool is_terminal(const GameGraph& g, const GameState& state) { return state.current == g.sink(); }

std::vector<bool> live_nodes(const GameGraph& g, const VisitedSet& visited) {
    const VertexId t = g.sink();
    std::vector<bool> live(2 * g.vertex_count(), false);
    std::vector<std::size_t> stack;
    for (std::uint8_t p = 0; p < 2; ++p) {
        if (!visited.contains(t, p)) {
            live[2 * t + p] = true;
            stack.push_back(2 * t + p);
        }
    }
    while (!stack.empty()) {
        const std::size_t node = stack.back();
        stack.pop_back();
        const auto w = static_cast<VertexId>(node / 2);
        const auto before = static_cast<std::uint8_t>(1 - node % 2);
        for (const Arc& a : g.in(w)) {
            const std::size_t prev = 2 * static_cast<std::size_t>(a.to) + before;
            if (a.to == t || live[prev] || visited.contains(a.to, before)) {
                continue;
            }
            live[prev] = true;
            stack.push_back(prev);
        }
    }
    return live;
}

std::vector<Move> legal_moves(const GameGraph& g, const GameState& state) {
    if (is_terminal(g, state)) {
        throw Error(ErrorCode::TerminalState, "game is over");
    }
    const auto live = live_nodes(g, state.visited);
    const auto flipped = static_cast<std::uint8_t>(1 - state.parity);
    std::vector<Move> moves;
    for (const Arc& a : g.out(state.current)) {
        if (live[2 * static_cast<std::size_t>(a.to) + flipped]) {
            moves.push_back({Edge{state.current, a.to, a.cost}, a.to});
        }
    }
    return moves;
}

std::optional<Rule> violated_rule(const GameGraph& g, const GameState& state, VertexId next) {
    if (next >= g.vertex_count() || !g.arc_cost(state.current, next)) {
        return Rule::NotAnEdge;
    }
    const auto flipped = static_cast<std::uint8_t>(1 - state.parity);
    if (state.visited.contains(next, flipped)) {
        return Rule::R2;
    }
    if (!live_nodes(g, state.visited)[2 * static_cast<std::size_t>(next) + flipped]) {
        return Rule::R1;
    }
    return std::nullopt;
}

GameState apply_move(const GameGraph& g, const GameState& state, VertexId next) {
    if (is_terminal(g, state)) {
        throw Error(ErrorCode::TerminalState, "game is over");
    }
    if (auto rule = violated_rule(g, state, next)) {
        throw Error(ErrorCode::IllegalMove, "move " + g.name(state.current) + "->" +
                                                (next < g.vertex_count() ? g.name(next) : std::to_string(next)) +
                                                " violates " + std::string(to_string(*rule)));
    }
    GameState after = state;
    const Cost c = *g.arc_cost(state.current, next);
    Cost& paid = state.parity == 0 ? after.cost_a : after.cost_b;
    paid = (CostValue(paid) + c).value();
    after.current = next;
    after.parity = static_cast<std::uint8_t>(1 - state.parity);
    after.visited.insert(next, after.parity);
    return after;
}

ReplayResult replay(const GameGraph& g, const std::vector<VertexId>& walk) {
    if (walk.empty() || walk.front() != g.source()) {
        throw Error(ErrorCode::IllegalMove, "walk does not start at the source");
    }
    ReplayResult result{initial_state(g), 0};
    for (std::size_t i = 1; i < walk.size(); ++i) {
        result.final_state = apply_move(g, result.final_state, walk[i]);
        ++result.moves;
    }
    return result;
}

} // namespace spg
