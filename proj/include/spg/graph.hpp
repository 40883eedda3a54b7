#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spg/cost.hpp"

namespace spg {

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Cost cost = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Unvalidated description of a game graph, as read from a file or built by a
// generator.  Vertex ids are 0..n-1 in input order.
struct GraphSpec {
    bool directed = false;
    std::size_t n = 0;
    std::vector<Edge> edges;
    VertexId s = 0;
    VertexId t = 0;
    std::vector<std::string> labels; // empty or exactly n entries

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct LoadOptions {
    // Reject zero-cost edges (positive costs only).
    bool strict_positive = false;
};

struct Arc {
    VertexId to = 0;
    Cost cost = 0;
};

// Immutable weighted graph with source and sink.  Out-arcs of every vertex are
// sorted by target id, which is the order legal moves are reported in.
class GameGraph {
  public:
    // Validates and builds; throws spg::Error (MalformedInput, NegativeCost,
    // ZeroCost, SelfLoop, ParallelEdge, NoPathToSink).
    static GameGraph load(const GraphSpec& spec, LoadOptions options = {});

    [[nodiscard]] bool directed() const { return directed_; }
    [[nodiscard]] std::size_t vertex_count() const { return offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] VertexId source() const { return s_; }
    [[nodiscard]] VertexId sink() const { return t_; }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }

    [[nodiscard]] std::span<const Arc> out(VertexId v) const {
        return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::span<const Arc> in(VertexId v) const {
        return {rarcs_.data() + roffsets_[v], rarcs_.data() + roffsets_[v + 1]};
    }

    // Cost of the arc u->v (either orientation for undirected graphs).
    [[nodiscard]] std::optional<Cost> arc_cost(VertexId u, VertexId v) const;

    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] std::string name(VertexId v) const;

    [[nodiscard]] GraphSpec spec() const;

  private:
    GameGraph() = default;

    bool directed_ = false;
    VertexId s_ = 0;
    VertexId t_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Arc> arcs_;
    std::vector<std::size_t> roffsets_{0};
    std::vector<Arc> rarcs_;
    std::vector<std::string> labels_;
};

struct GraphClass {
    bool is_tree = false;            // undirected and acyclic
    bool is_dag = false;             // directed and acyclic
    bool is_cactus = false;          // undirected, every edge on at most one simple cycle
    bool is_directed_cactus = false; // orientation of an undirected cactus
    bool is_bipartite = false;
    bool is_general = false; // none of the structured classes above
};

GraphClass classify(const GameGraph& g);

// Throws CycleDetected for directed graphs with a cycle and for undirected
// graphs with at least one edge.
std::vector<VertexId> topological_order(const GameGraph& g);

// mask[v] is true iff target is reachable from v.
std::vector<bool> vertices_reaching(const GameGraph& g, VertexId target);

// mask[v] is true iff v is reachable from origin.
std::vector<bool> vertices_reachable_from(const GameGraph& g, VertexId origin);

// Biconnected component of the (underlying) undirected graph.  Views into
// the owning BlockCutTree.
struct Block {
    std::span<const VertexId> vertices;
    std::span<const std::size_t> edges; // indices into GameGraph::edges()

    [[nodiscard]] bool is_bridge() const { return edges.size() == 1; }
    [[nodiscard]] bool is_cycle() const { return vertices.size() >= 3 && edges.size() == vertices.size(); }
};

// Incident block ids per vertex, stored contiguously.
struct VertexBlocks {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> entries;

    [[nodiscard]] std::span<const std::size_t> operator[](VertexId v) const {
        return {entries.data() + offsets[v], entries.data() + offsets[v + 1]};
    }
};

// Move-only: blocks point into the pools.
struct BlockCutTree {
    BlockCutTree() = default;
    BlockCutTree(BlockCutTree&&) = default;
    BlockCutTree& operator=(BlockCutTree&&) = default;
    BlockCutTree(const BlockCutTree&) = delete;
    BlockCutTree& operator=(const BlockCutTree&) = delete;

    std::vector<Block> blocks;
    // Filled by block_cut_tree and index_block_vertices only.
    std::vector<VertexId> articulation_vertices; // sorted
    VertexBlocks blocks_of;
    // Per block, its vertex reached first by the search.  Blocks of the first
    // root's component come first, each after the blocks hanging below it.
    std::vector<VertexId> attachment;
    std::size_t root_component_blocks = 0;
    // Blocks crossed by paths from the first root to the target, in order.
    std::vector<std::size_t> target_path;
    std::vector<VertexId> vertex_pool;
    std::vector<std::size_t> edge_pool;
};

// Throws NotUndirected for directed graphs.
BlockCutTree block_cut_tree(const GameGraph& g);

// Same decomposition on the underlying undirected graph; accepts any graph.
// The search starts at first_root.
BlockCutTree underlying_block_cut_tree(const GameGraph& g, VertexId first_root = 0, VertexId target = kNoVertex);
void index_block_vertices(BlockCutTree& tree, std::size_t n);

// Minimal total cost of an s-t path (Dijkstra).
Cost cooperative_shortest_path(const GameGraph& g);

// Proper 2-colouring of the underlying undirected graph, if one exists.
std::optional<std::vector<std::uint8_t>> two_coloring(const GameGraph& g);

} // namespace spg
