#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spg/cost.hpp"
#include "spg/engine.hpp"
#include "spg/graph.hpp"

namespace spg {

// A decision value together with the move that realizes it.  kind is a
// solver-specific tag for the chosen alternative.
struct Choice {
    CostPair value = CostPair::top();
    VertexId next = kNoVertex;
    std::uint8_t kind = 0;

    [[nodiscard]] bool feasible() const { return value.finite(); }
    [[nodiscard]] OptionRank rank() const { return rank_of(value, next); }
};

// Keeps the OptionRank-minimal feasible alternative.
void offer(Choice& best, const CostPair& value, VertexId next, std::uint8_t kind);

// Closed odd walk from a vertex into a dead-end branch and back that hands
// the decision to the other player.  Costs are relative to the player who
// starts it.
struct SwapOption {
    CostValue sw_d;
    CostValue sw_f;
    VertexId first = kNoVertex; // first vertex of the realization after the root
    std::size_t block = 0;      // branch block the walk enters

    [[nodiscard]] CostPair pair() const { return {sw_d, sw_f}; }
};

bool better_swap(const SwapOption& a, const SwapOption& b);

// One traversal direction of a cycle: positions 0..k, edge i joins positions
// i and i+1 (mod k+1).
struct Ring {
    std::vector<VertexId> vertex;
    std::vector<Cost> cost;
    std::vector<std::uint8_t> forward_ok;  // edge i usable from i to i+1
    std::vector<std::uint8_t> backward_ok; // edge i usable from i+1 to i
    std::vector<std::optional<SwapOption>> swap;

    [[nodiscard]] std::size_t last() const { return vertex.size() - 1; }
    [[nodiscard]] std::size_t size() const { return vertex.size(); }
    [[nodiscard]] Ring reversed() const;
};

// Ring of a cycle block starting at root, following its lower-id neighbour.
Ring make_ring(const GameGraph& g, std::span<const std::size_t> block_edges, VertexId root);

struct StripComponent {
    std::size_t block = 0;
    VertexId entry = 0;
    VertexId exit = 0;
    bool cycle = false;
    Cost bridge_cost = 0;
    std::size_t exit_pos = 0; // position of exit in ring order (cycles)
};

// Blocks crossed by every s-t path, in order; cut[i] is the entry of
// components[i] and cut[i+1] its exit.
struct ConnectionStrip {
    std::vector<VertexId> cut;
    std::vector<StripComponent> components;
};

struct CactusDecomposition {
    BlockCutTree tree;
    ConnectionStrip strip;
    std::vector<VertexId> branch_root;        // per block; kNoVertex for strip blocks
    std::vector<std::size_t> branch_order;    // branch blocks, parents first
    std::vector<std::uint8_t> on_strip;       // per vertex
};

// Throws NotCactus unless every block of the underlying graph is a bridge or a cycle.
CactusDecomposition decompose(const GameGraph& g);

// Best swap option at every vertex, computed leaves first over the branches.
class SwapTable {
  public:
    SwapTable(const GameGraph& g, const CactusDecomposition& d);

    [[nodiscard]] std::optional<SwapOption> at(VertexId v) const {
        return slot_[v] == kNoSlot ? std::nullopt : std::optional<SwapOption>(options_[slot_[v]]);
    }
    // Closed walk root, ..., root realizing at(root).
    [[nodiscard]] std::vector<VertexId> realization(VertexId root) const;
    // Appends the realization without its leading root.
    void append_realization(VertexId root, std::vector<VertexId>& walk) const;

    [[nodiscard]] const GameGraph& graph() const { return *g_; }
    [[nodiscard]] const CactusDecomposition& decomposition() const { return *d_; }
    // Ring of a branch cycle rooted at its attachment vertex, swaps filled in.
    [[nodiscard]] Ring branch_ring(std::size_t block) const;

  private:
    static constexpr std::uint32_t kNoSlot = ~std::uint32_t{0};

    const GameGraph* g_;
    const CactusDecomposition* d_;
    std::vector<std::uint32_t> slot_; // per vertex, index into options_
    std::vector<SwapOption> options_;
};

SwapTable contract_branches(const GameGraph& g, const CactusDecomposition& d);

// Swap through a pendant cycle rooted at position 0 of ring, over both directions.
std::optional<SwapOption> contract_pendant_cycle(const Ring& ring, std::size_t block);

// Spe-path costs from a strip vertex: ed2v allows a later second visit of the
// vertex (the walk may come back to it), edv does not.  swap is the vertex's
// own swap followed by edv, arrival the best first-visit choice.
struct ExitCosts {
    bool sink = false;
    Choice edv;
    Choice ed2v;
    Choice swap;
    Choice arrival;
};

ExitCosts sink_exit_costs();
ExitCosts propagate_bridge(Cost cost, VertexId w, const ExitCosts& at_w, const std::optional<SwapOption>& swap_at_u,
                           bool usable = true);
// ring starts at the entry vertex v0; exit_pos is the position of the exit.
ExitCosts solve_strip_cycle(const Ring& ring, std::size_t exit_pos, const ExitCosts& at_exit,
                            const std::optional<SwapOption>& swap_at_entry, bool directed);

// Exit costs at every cut vertex of the strip, sink last.
std::vector<ExitCosts> strip_exit_costs(const GameGraph& g, const CactusDecomposition& d, const SwapTable& swaps);

// Throw NotCactus / NotDirectedCactus for graphs outside the class.
Solution solve_cactus(const GameGraph& g);
Solution solve_directed_cactus(const GameGraph& g);
// Forced s-t path of an undirected tree; throws NotCactus on cycles.
Solution solve_tree(const GameGraph& g);

} // namespace spg
