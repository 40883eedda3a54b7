#include <algorithm>

#include "spg/cactus.hpp"
#include "spg/error.hpp"

namespace spg {

CactusDecomposition decompose(const GameGraph& g) {
    CactusDecomposition d;
    d.tree = underlying_block_cut_tree(g, g.source(), g.sink());
    for (const Block& b : d.tree.blocks) {
        if (!b.is_bridge() && !b.is_cycle()) {
            throw Error(ErrorCode::NotCactus, "a block has " + std::to_string(b.edges.size()) + " edges on " +
                                                  std::to_string(b.vertices.size()) + " vertices");
        }
    }
    const std::size_t n = g.vertex_count();
    const std::size_t blocks = d.tree.blocks.size();
    const std::size_t reached = d.tree.root_component_blocks;
    const VertexId s = g.source();
    const VertexId t = g.sink();
    const auto edges = g.edges();

    const std::vector<std::size_t>& path = d.tree.target_path;
    if (t != s && path.empty()) {
        throw Error(ErrorCode::NoPathToSink, "sink is not connected to the source");
    }

    d.on_strip.assign(n, 0);
    d.on_strip[s] = 1;
    d.branch_root.assign(blocks, kNoVertex);
    std::vector<std::uint8_t> strip_block(blocks, 0);
    d.strip.cut.push_back(s);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Block& block = d.tree.blocks[path[i]];
        StripComponent comp;
        comp.block = path[i];
        comp.entry = d.tree.attachment[path[i]];
        comp.exit = i + 1 < path.size() ? d.tree.attachment[path[i + 1]] : t;
        comp.cycle = block.is_cycle();
        if (comp.cycle) {
            const Ring ring = make_ring(g, block.edges, comp.entry);
            comp.exit_pos = static_cast<std::size_t>(
                std::find(ring.vertex.begin(), ring.vertex.end(), comp.exit) - ring.vertex.begin());
        } else {
            comp.bridge_cost = edges[block.edges.front()].cost;
            comp.exit_pos = 1;
        }
        strip_block[comp.block] = 1;
        for (VertexId v : block.vertices) {
            d.on_strip[v] = 1;
        }
        d.strip.cut.push_back(comp.exit);
        d.strip.components.push_back(comp);
    }

    // The search closes blocks below a vertex before the block above it, so
    // the reversed closing order lists parents first.
    for (std::size_t b = reached; b-- > 0;) {
        if (!strip_block[b]) {
            d.branch_root[b] = d.tree.attachment[b];
            d.branch_order.push_back(b);
        }
    }
    return d;
}

} // namespace spg
