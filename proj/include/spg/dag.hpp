#pragma once

#include <vector>

#include "spg/cost.hpp"
#include "spg/engine.hpp"
#include "spg/graph.hpp"

namespace spg {

struct DagTables {
    std::vector<CostValue> p_d; // cost to t for the player deciding at v
    std::vector<CostValue> p_f; // cost to t for the other player
    std::vector<VertexId> choice;
    std::size_t arcs_evaluated = 0;
};

// Throws NotADag.
DagTables dag_tables(const GameGraph& g);

// Throws NotADag or NoPathToSink.
Solution solve_dag(const GameGraph& g);

} // namespace spg
