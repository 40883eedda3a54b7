#include "spg/engine.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "spg/error.hpp"

namespace spg {

namespace {

constexpr std::size_t kDefaultVertexLimit = 64;

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

GameState advance(const GameState& state, VertexId next) {
    GameState child;
    child.current = next;
    child.parity = static_cast<std::uint8_t>(1 - state.parity);
    child.visited = state.visited;
    child.visited.insert(next, child.parity);
    return child;
}

struct Scored {
    CostPair value = CostPair::top();
    VertexId next = kNoVertex;
    OptionRank rank{CostValue::top(), CostValue::top(), kNoVertex};

    void offer(Cost edge, const CostPair& child, VertexId w) {
        const CostPair option = after_move(edge, child);
        const OptionRank r = rank_of(option, w);
        if (next == kNoVertex || r < rank) {
            value = option;
            next = w;
            rank = r;
        }
    }
};

std::pair<CostPair, std::vector<VertexId>> low_memory(const GameGraph& g, const GameState& state, std::size_t& nodes) {
    ++nodes;
    if (is_terminal(g, state)) {
        return {CostPair{}, {state.current}};
    }
    Scored best;
    std::vector<VertexId> best_walk;
    for (const Move& m : legal_moves(g, state)) {
        auto [child, walk] = low_memory(g, advance(state, m.next), nodes);
        const VertexId before = best.next;
        best.offer(m.edge.cost, child, m.next);
        if (best.next != before) {
            best_walk = std::move(walk);
        }
    }
    best_walk.insert(best_walk.begin(), state.current);
    return {best.value, std::move(best_walk)};
}

} // namespace

Solution make_solution(const GameGraph& g, std::vector<VertexId> walk, std::string algorithm, std::size_t node_count) {
    Solution sol;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        const auto cost = g.arc_cost(walk[i], walk[i + 1]);
        if (!cost) {
            throw Error(ErrorCode::IllegalMove, "walk uses a missing edge");
        }
        const Player payer = mover_at(i);
        sol.payers.push_back(payer);
        (payer == Player::A ? sol.cost_a : sol.cost_b) += *cost;
    }
    sol.walk = std::move(walk);
    sol.node_count = node_count;
    sol.algorithm = std::move(algorithm);
    return sol;
}

std::size_t engine_vertex_limit() {
    if (const char* env = std::getenv("SPG_ENGINE_VERTEX_LIMIT")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::MalformedInput, "SPG_ENGINE_VERTEX_LIMIT is not a number");
        }
    }
    return kDefaultVertexLimit;
}

struct Engine::Impl {
    struct Entry {
        CostPair value;
        VertexId next = kNoVertex;
    };

    const GameGraph* g;
    std::unordered_map<std::vector<std::uint64_t>, Entry, WordsHash> memo;

    static std::vector<std::uint64_t> key_of(const GameState& state) {
        std::vector<std::uint64_t> key = state.visited.words();
        key.push_back((static_cast<std::uint64_t>(state.current) << 1) | state.parity);
        return key;
    }

    Entry evaluate(const GameState& state) {
        if (is_terminal(*g, state)) {
            return {CostPair{}, kNoVertex};
        }
        auto key = key_of(state);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        Scored best;
        for (const Move& m : legal_moves(*g, state)) {
            best.offer(m.edge.cost, evaluate(advance(state, m.next)).value, m.next);
        }
        Entry entry{best.value, best.next};
        memo.emplace(std::move(key), entry);
        return entry;
    }
};

Engine::Engine(const GameGraph& g) : impl_(std::make_unique<Impl>()) {
    if (g.vertex_count() > engine_vertex_limit()) {
        throw Error(ErrorCode::TooManyVertices, std::to_string(g.vertex_count()) + " vertices exceed the memo limit of " +
                                                    std::to_string(engine_vertex_limit()));
    }
    impl_->g = &g;
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

CostPair Engine::value(const GameState& state) { return impl_->evaluate(state).value; }

VertexId Engine::choice(const GameState& state) { return impl_->evaluate(state).next; }

WhatIf Engine::what_if(const GameState& state) {
    WhatIf result;
    if (is_terminal(*impl_->g, state)) {
        return result;
    }
    result.value = value(state);
    for (const Move& m : legal_moves(*impl_->g, state)) {
        result.options.emplace_back(m, after_move(m.edge.cost, value(advance(state, m.next))));
    }
    return result;
}

std::vector<VertexId> Engine::continuation(const GameState& state) {
    std::vector<VertexId> walk{state.current};
    GameState cur = state;
    while (!is_terminal(*impl_->g, cur)) {
        const VertexId next = choice(cur);
        if (next == kNoVertex) {
            throw Error(ErrorCode::NoPathToSink, "no legal continuation");
        }
        cur = advance(cur, next);
        walk.push_back(next);
    }
    return walk;
}

std::size_t Engine::node_count() const { return impl_->memo.size(); }

Solution solve(const GameGraph& g, EngineMode mode) {
    const GameState start = initial_state(g);
    if (mode == EngineMode::LowMemory) {
        std::size_t nodes = 0;
        auto [value, walk] = low_memory(g, start, nodes);
        if (!value.finite()) {
            throw Error(ErrorCode::NoPathToSink, "no legal play reaches the sink");
        }
        return make_solution(g, std::move(walk), "engine-dfs", nodes);
    }
    Engine engine(g);
    if (!engine.value(start).finite()) {
        throw Error(ErrorCode::NoPathToSink, "no legal play reaches the sink");
    }
    auto walk = engine.continuation(start);
    return make_solution(g, std::move(walk), "engine", engine.node_count());
}

CostPair value_without_memo(const GameGraph& g, const GameState& state, std::size_t* nodes) {
    if (nodes) {
        ++*nodes;
    }
    if (is_terminal(g, state)) {
        return {};
    }
    Scored best;
    for (const Move& m : legal_moves(g, state)) {
        best.offer(m.edge.cost, value_without_memo(g, advance(state, m.next), nodes), m.next);
    }
    return best.value;
}

WhatIf value_at(const GameGraph& g, const GameState& state) {
    Engine engine(g);
    return engine.what_if(state);
}

std::pair<CostPair, std::vector<VertexId>> low_memory_continuation(const GameGraph& g, const GameState& state) {
    std::size_t nodes = 0;
    return low_memory(g, state, nodes);
}

bool spgd(const Solution& spe, Cost bound_a, Cost bound_b) {
    return spe.cost_a <= CostValue(bound_a) && spe.cost_b <= CostValue(bound_b);
}

bool spgd(const GameGraph& g, Cost bound_a, Cost bound_b, EngineMode mode) {
    return spgd(solve(g, mode), bound_a, bound_b);
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational price_of_anarchy(const GameGraph& g, const Solution& spe) {
    const Cost shortest = cooperative_shortest_path(g);
    if (shortest == 0) {
        throw Error(ErrorCode::ZeroShortestPath, "cooperative shortest path has cost 0");
    }
    const Cost total = (spe.cost_a + spe.cost_b).value();
    const Cost d = std::gcd(total, shortest);
    return {total / d, shortest / d};
}

Rational price_of_anarchy(const GameGraph& g) { return price_of_anarchy(g, solve(g)); }

} // namespace spg
