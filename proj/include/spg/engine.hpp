#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spg/cost.hpp"
#include "spg/game.hpp"
#include "spg/graph.hpp"

namespace spg {

struct Solution {
    CostValue cost_a = 0;
    CostValue cost_b = 0;
    std::vector<VertexId> walk;
    std::vector<Player> payers; // payers[i] pays for walk[i] -> walk[i+1]
    std::size_t node_count = 0;
    std::string algorithm;
};

// Builds a Solution from an s-t walk, charging each move to its mover.
Solution make_solution(const GameGraph& g, std::vector<VertexId> walk, std::string algorithm,
                       std::size_t node_count);

enum class EngineMode { Memoized, LowMemory };

// Largest vertex count accepted by the memoized engine; SPG_ENGINE_VERTEX_LIMIT
// overrides the default of 64.
std::size_t engine_vertex_limit();

struct WhatIf {
    CostPair value;
    // Legal moves with the pair (mover cost, other cost) each one leads to.
    std::vector<std::pair<Move, CostPair>> options;
};

// Backward induction over the game tree with a memo keyed by state.  Not
// thread-safe; one instance per solve or per session.
class Engine {
  public:
    explicit Engine(const GameGraph& g);
    ~Engine();
    Engine(Engine&&) noexcept;
    Engine& operator=(Engine&&) noexcept;

    CostPair value(const GameState& state);
    // Best next vertex under OptionRank; kNoVertex at t.
    VertexId choice(const GameState& state);
    WhatIf what_if(const GameState& state);
    // Equilibrium walk from the given state to t.
    std::vector<VertexId> continuation(const GameState& state);

    [[nodiscard]] std::size_t node_count() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Throws TooManyVertices in memoized mode above engine_vertex_limit().
Solution solve(const GameGraph& g, EngineMode mode = EngineMode::Memoized);

// Memo-free value of a state; counts every visited game-tree node.
CostPair value_without_memo(const GameGraph& g, const GameState& state, std::size_t* nodes = nullptr);

WhatIf value_at(const GameGraph& g, const GameState& state);

// Memo-free equilibrium value and walk (from state.current) for graphs above
// the memo limit.
std::pair<CostPair, std::vector<VertexId>> low_memory_continuation(const GameGraph& g, const GameState& state);

bool spgd(const Solution& spe, Cost bound_a, Cost bound_b);
bool spgd(const GameGraph& g, Cost bound_a, Cost bound_b, EngineMode mode = EngineMode::Memoized);

struct Rational {
    Cost num = 0;
    Cost den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
    [[nodiscard]] std::string str() const;
};

// (cost_a + cost_b) / cooperative shortest path, reduced; throws ZeroShortestPath.
Rational price_of_anarchy(const GameGraph& g, const Solution& spe);
Rational price_of_anarchy(const GameGraph& g);

} // namespace spg
