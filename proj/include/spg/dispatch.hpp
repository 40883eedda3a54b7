#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "spg/engine.hpp"
#include "spg/game.hpp"
#include "spg/graph.hpp"

namespace spg {

enum class Algorithm { Auto, Engine, EngineDfs, Dag, Cactus, DirectedCactus, Tree };

// Names as accepted by --algorithm: auto, engine, engine-dfs, dag, cactus,
// directed-cactus, tree.
Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm a);

// Structured solver for the graph's class, else the engine (low-memory mode
// above the memo vertex limit).
Algorithm choose_algorithm(const GameGraph& g);

Solution solve_with(const GameGraph& g, Algorithm algorithm);

// Replays the walk and checks the reported costs; throws IllegalMove otherwise.
void verify_solution(const GameGraph& g, const Solution& sol);

nlohmann::ordered_json cost_pair_json(const CostPair& p);
nlohmann::ordered_json solution_json(const GameGraph& g, const Solution& sol);
nlohmann::ordered_json state_json(const GameGraph& g, const GameState& state);
std::string walk_labels(const GameGraph& g, const std::vector<VertexId>& walk);

} // namespace spg
