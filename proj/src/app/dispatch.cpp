#include "spg/dispatch.hpp"

#include "spg/cactus.hpp"
#include "spg/dag.hpp"
#include "spg/error.hpp"

namespace spg {

namespace {

struct AlgorithmName {
    Algorithm algorithm;
    std::string_view name;
};

constexpr AlgorithmName kNames[] = {
    {Algorithm::Auto, "auto"},     {Algorithm::Engine, "engine"},
    {Algorithm::EngineDfs, "engine-dfs"}, {Algorithm::Dag, "dag"},
    {Algorithm::Cactus, "cactus"}, {Algorithm::DirectedCactus, "directed-cactus"},
    {Algorithm::Tree, "tree"},
};

nlohmann::ordered_json cost_json(const CostValue& c) {
    if (c.is_top()) {
        return nullptr;
    }
    return c.value();
}

} // namespace

Algorithm parse_algorithm(std::string_view name) {
    for (const auto& entry : kNames) {
        if (entry.name == name) {
            return entry.algorithm;
        }
    }
    throw Error(ErrorCode::MalformedInput, "unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algorithm a) {
    for (const auto& entry : kNames) {
        if (entry.algorithm == a) {
            return entry.name;
        }
    }
    return "?";
}

Algorithm choose_algorithm(const GameGraph& g) {
    const GraphClass c = classify(g);
    if (c.is_tree) {
        return Algorithm::Tree;
    }
    if (c.is_dag) {
        return Algorithm::Dag;
    }
    if (c.is_cactus) {
        return Algorithm::Cactus;
    }
    if (c.is_directed_cactus) {
        return Algorithm::DirectedCactus;
    }
    return g.vertex_count() <= engine_vertex_limit() ? Algorithm::Engine : Algorithm::EngineDfs;
}

Solution solve_with(const GameGraph& g, Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::Auto: return solve_with(g, choose_algorithm(g));
    case Algorithm::Engine: return solve(g, EngineMode::Memoized);
    case Algorithm::EngineDfs: return solve(g, EngineMode::LowMemory);
    case Algorithm::Dag: return solve_dag(g);
    case Algorithm::Cactus: return solve_cactus(g);
    case Algorithm::DirectedCactus: return solve_directed_cactus(g);
    case Algorithm::Tree: return solve_tree(g);
    }
    throw Error(ErrorCode::MalformedInput, "unknown algorithm");
}

void verify_solution(const GameGraph& g, const Solution& sol) {
    const auto played = replay(g, sol.walk);
    if (played.final_state.current != g.sink() || CostValue(played.final_state.cost_a) != sol.cost_a ||
        CostValue(played.final_state.cost_b) != sol.cost_b) {
        throw Error(ErrorCode::IllegalMove, "walk does not reproduce the reported costs");
    }
}

nlohmann::ordered_json cost_pair_json(const CostPair& p) {
    return {{"decider", cost_json(p.decider)}, {"follower", cost_json(p.follower)}};
}

nlohmann::ordered_json solution_json(const GameGraph& g, const Solution& sol) {
    nlohmann::ordered_json out;
    out["cost_a"] = cost_json(sol.cost_a);
    out["cost_b"] = cost_json(sol.cost_b);
    out["walk"] = sol.walk;
    auto& labels = out["walk_labels"] = nlohmann::ordered_json::array();
    for (VertexId v : sol.walk) {
        labels.push_back(g.name(v));
    }
    auto& payers = out["payers"] = nlohmann::ordered_json::array();
    for (Player p : sol.payers) {
        payers.push_back(std::string(1, player_name(p)));
    }
    out["algorithm"] = sol.algorithm;
    out["node_count"] = sol.node_count;
    return out;
}

nlohmann::ordered_json state_json(const GameGraph& g, const GameState& state) {
    nlohmann::ordered_json out;
    out["current"] = state.current;
    out["current_label"] = g.name(state.current);
    out["parity"] = state.parity;
    out["mover"] = std::string(1, player_name(state.mover()));
    auto& visited = out["visited"] = nlohmann::ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (std::uint8_t p = 0; p < 2; ++p) {
            if (state.visited.contains(v, p)) {
                visited.push_back({v, p});
            }
        }
    }
    out["cost_a"] = state.cost_a;
    out["cost_b"] = state.cost_b;
    out["terminal"] = is_terminal(g, state);
    return out;
}

std::string walk_labels(const GameGraph& g, const std::vector<VertexId>& walk) {
    std::string out;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        out += (i ? "," : "") + g.name(walk[i]);
    }
    return out;
}

} // namespace spg
