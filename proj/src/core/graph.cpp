#include "spg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <deque>
#include <functional>
#include <queue>
#include <utility>

#include "spg/error.hpp"

namespace spg {

namespace {

void build_csr(std::size_t n, std::vector<std::pair<VertexId, Arc>>& entries, std::vector<std::size_t>& offsets,
               std::vector<Arc>& arcs) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return std::pair(a.first, a.second.to) < std::pair(b.first, b.second.to); });
    offsets.assign(n + 1, 0);
    for (const auto& [from, arc] : entries) {
        ++offsets[from + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        offsets[v + 1] += offsets[v];
    }
    arcs.clear();
    arcs.reserve(entries.size());
    for (const auto& [from, arc] : entries) {
        arcs.push_back(arc);
    }
}

// Incident (neighbour, edge index) pairs of the underlying undirected graph.
struct Incidence {
    std::vector<std::uint32_t> offsets;
    std::vector<std::pair<VertexId, std::uint32_t>> entries;

    [[nodiscard]] std::span<const std::pair<VertexId, std::uint32_t>> operator[](VertexId v) const {
        return {entries.data() + offsets[v], entries.data() + offsets[v + 1]};
    }
};

Incidence undirected_adjacency(const GameGraph& g) {
    Incidence adj;
    const auto edges = g.edges();
    adj.offsets.assign(g.vertex_count() + 1, 0);
    for (const Edge& e : edges) {
        ++adj.offsets[e.u + 1];
        ++adj.offsets[e.v + 1];
    }
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.entries.resize(2 * edges.size());
    std::vector<std::uint32_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
        adj.entries[fill[edges[e].u]++] = {edges[e].v, e};
        adj.entries[fill[edges[e].v]++] = {edges[e].u, e};
    }
    return adj;
}

std::vector<bool> search(std::size_t n, VertexId origin, const std::function<std::span<const Arc>(VertexId)>& next) {
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack{origin};
    seen[origin] = true;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const Arc& a : next(v)) {
            if (!seen[a.to]) {
                seen[a.to] = true;
                stack.push_back(a.to);
            }
        }
    }
    return seen;
}

} // namespace

GameGraph GameGraph::load(const GraphSpec& spec, LoadOptions options) {
    if (spec.n == 0) {
        throw Error(ErrorCode::MalformedInput, "graph has no vertices");
    }
    if (spec.n >= kNoVertex) {
        throw Error(ErrorCode::MalformedInput, "too many vertices");
    }
    if (spec.s >= spec.n || spec.t >= spec.n) {
        throw Error(ErrorCode::MalformedInput, "source or sink index out of range");
    }
    if (!spec.labels.empty() && spec.labels.size() != spec.n) {
        throw Error(ErrorCode::MalformedInput, "label count does not match vertex count");
    }

    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
        const Edge& e = spec.edges[i];
        const auto where = [i] { return "edge " + std::to_string(i); };
        if (e.u >= spec.n || e.v >= spec.n) {
            throw Error(ErrorCode::MalformedInput, where() + " has an endpoint out of range");
        }
        if (e.cost < 0) {
            throw Error(ErrorCode::NegativeCost, where() + " has negative cost");
        }
        if (options.strict_positive && e.cost == 0) {
            throw Error(ErrorCode::ZeroCost, where() + " has zero cost");
        }
        if (e.u == e.v) {
            throw Error(ErrorCode::SelfLoop, where() + " is a self-loop");
        }
    }

    GameGraph g;
    g.directed_ = spec.directed;
    g.s_ = spec.s;
    g.t_ = spec.t;
    g.edges_ = spec.edges;
    g.labels_ = spec.labels;

    std::vector<std::pair<VertexId, Arc>> fwd;
    std::vector<std::pair<VertexId, Arc>> rev;
    for (const Edge& e : spec.edges) {
        fwd.emplace_back(e.u, Arc{e.v, e.cost});
        rev.emplace_back(e.v, Arc{e.u, e.cost});
        if (!spec.directed) {
            fwd.emplace_back(e.v, Arc{e.u, e.cost});
            rev.emplace_back(e.u, Arc{e.v, e.cost});
        }
    }
    build_csr(spec.n, fwd, g.offsets_, g.arcs_);
    build_csr(spec.n, rev, g.roffsets_, g.rarcs_);
    for (VertexId v = 0; v < spec.n; ++v) {
        const auto arcs = g.out(v);
        for (std::size_t i = 1; i < arcs.size(); ++i) {
            if (arcs[i].to == arcs[i - 1].to) {
                throw Error(ErrorCode::ParallelEdge,
                            "more than one edge from " + std::to_string(v) + " to " + std::to_string(arcs[i].to));
            }
        }
    }

    if (!vertices_reachable_from(g, g.s_)[g.t_]) {
        throw Error(ErrorCode::NoPathToSink, "sink is not reachable from source");
    }
    return g;
}

std::optional<Cost> GameGraph::arc_cost(VertexId u, VertexId v) const {
    const auto arcs = out(u);
    auto it = std::lower_bound(arcs.begin(), arcs.end(), v, [](const Arc& a, VertexId x) { return a.to < x; });
    if (it != arcs.end() && it->to == v) {
        return it->cost;
    }
    return std::nullopt;
}

std::string GameGraph::name(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

GraphSpec GameGraph::spec() const {
    return GraphSpec{directed_, vertex_count(), edges_, s_, t_, labels_};
}

std::vector<bool> vertices_reaching(const GameGraph& g, VertexId target) {
    return search(g.vertex_count(), target, [&](VertexId v) { return g.in(v); });
}

std::vector<bool> vertices_reachable_from(const GameGraph& g, VertexId origin) {
    return search(g.vertex_count(), origin, [&](VertexId v) { return g.out(v); });
}

std::vector<VertexId> topological_order(const GameGraph& g) {
    const std::size_t n = g.vertex_count();
    if (!g.directed() && g.edge_count() > 0) {
        throw Error(ErrorCode::CycleDetected, "undirected edges form 2-cycles");
    }
    std::vector<std::size_t> indegree(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        indegree[v] = g.in(v).size();
    }
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            ready.push(v);
        }
    }
    std::vector<VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        const VertexId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (const Arc& a : g.out(v)) {
            if (--indegree[a.to] == 0) {
                ready.push(a.to);
            }
        }
    }
    if (order.size() != n) {
        throw Error(ErrorCode::CycleDetected, "graph contains a directed cycle");
    }
    return order;
}

BlockCutTree underlying_block_cut_tree(const GameGraph& g, VertexId first_root, VertexId target) {
    const std::size_t n = g.vertex_count();
    const auto edges = g.edges();
    constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    // Adjacency offset and discovery time per vertex.
    struct Slot {
        std::uint32_t begin = 0;
        std::uint32_t disc = kNone;
    };
    std::vector<Slot> slot(n + 1);
    for (const Edge& e : edges) {
        ++slot[e.u + 1].begin;
        ++slot[e.v + 1].begin;
    }
    for (std::size_t v = 0; v < n; ++v) {
        slot[v + 1].begin += slot[v].begin;
    }
    std::vector<std::pair<VertexId, std::uint32_t>> adj(2 * edges.size());
    {
        std::vector<std::uint32_t> fill(n);
        for (std::size_t v = 0; v < n; ++v) {
            fill[v] = slot[v].begin;
        }
        for (std::uint32_t e = 0; e < edges.size(); ++e) {
            adj[fill[edges[e].u]++] = {edges[e].v, e};
            adj[fill[edges[e].v]++] = {edges[e].u, e};
        }
    }
    std::uint32_t timer = 0;

    struct Frame {
        VertexId v;
        std::uint32_t parent_edge;
        std::uint32_t next, end;
        std::uint32_t disc, low;
        bool toward_target;
    };
    std::vector<Frame> frames;
    struct Pending {
        std::uint32_t e;
        VertexId a, b;
    };
    std::vector<Pending> edge_stack;
    struct Extent {
        std::size_t vertex_begin, vertex_end, edge_begin, edge_end;
    };
    std::vector<Extent> extents;
    BlockCutTree tree;
    tree.edge_pool.reserve(edges.size());
    tree.vertex_pool.reserve(2 * edges.size());

    auto enter = [&](VertexId v, std::uint32_t parent_edge) {
        slot[v].disc = timer;
        frames.push_back({v, parent_edge, slot[v].begin, slot[v + 1].begin, timer, timer, false});
        ++timer;
    };
    auto search = [&](VertexId root) {
        if (slot[root].disc != kNone) {
            return;
        }
        enter(root, kNone);
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < f.end) {
                const auto [w, e] = adj[f.next++];
                if (e == f.parent_edge) {
                    continue;
                }
                const std::uint32_t seen = slot[w].disc;
                if (seen == kNone) {
                    edge_stack.push_back({e, f.v, w});
                    enter(w, e);
                    if (w == target && root == first_root) {
                        for (Frame& up : frames) {
                            up.toward_target = true;
                        }
                    }
                } else if (seen < f.disc) {
                    edge_stack.push_back({e, f.v, w});
                    f.low = std::min(f.low, seen);
                }
                continue;
            }
            const Frame done = f;
            frames.pop_back();
            if (frames.empty()) {
                break;
            }
            Frame& parent = frames.back();
            const VertexId u = parent.v;
            parent.low = std::min(parent.low, done.low);
            if (done.low >= parent.disc) {
                const std::size_t first_edge = tree.edge_pool.size();
                const std::size_t first_vertex = tree.vertex_pool.size();
                Pending p{};
                do {
                    p = edge_stack.back();
                    edge_stack.pop_back();
                    tree.edge_pool.push_back(p.e);
                    tree.vertex_pool.push_back(p.a);
                    tree.vertex_pool.push_back(p.b);
                } while (p.e != done.parent_edge);
                const auto vbegin = tree.vertex_pool.begin() + static_cast<std::ptrdiff_t>(first_vertex);
                std::sort(vbegin, tree.vertex_pool.end());
                tree.vertex_pool.erase(std::unique(vbegin, tree.vertex_pool.end()), tree.vertex_pool.end());
                std::sort(tree.edge_pool.begin() + static_cast<std::ptrdiff_t>(first_edge), tree.edge_pool.end());
                extents.push_back({first_vertex, tree.vertex_pool.size(), first_edge, tree.edge_pool.size()});
                if (done.toward_target) {
                    tree.target_path.push_back(tree.attachment.size());
                }
                tree.attachment.push_back(u);
            }
        }
    };
    if (n > 0) {
        search(first_root);
    }
    tree.root_component_blocks = extents.size();
    std::reverse(tree.target_path.begin(), tree.target_path.end());
    for (VertexId root = 0; root < n; ++root) {
        search(root);
    }
    tree.blocks.reserve(extents.size());
    const std::span<const VertexId> vertex_pool(tree.vertex_pool);
    const std::span<const std::size_t> edge_pool(tree.edge_pool);
    for (const Extent& x : extents) {
        tree.blocks.push_back({vertex_pool.subspan(x.vertex_begin, x.vertex_end - x.vertex_begin),
                               edge_pool.subspan(x.edge_begin, x.edge_end - x.edge_begin)});
    }
    return tree;
}

void index_block_vertices(BlockCutTree& tree, std::size_t n) {
    VertexBlocks& index = tree.blocks_of;
    index.offsets.assign(n + 1, 0);
    for (VertexId v : tree.vertex_pool) {
        ++index.offsets[v + 1];
    }
    std::partial_sum(index.offsets.begin(), index.offsets.end(), index.offsets.begin());
    index.entries.resize(index.offsets[n]);
    std::vector<std::size_t> fill(index.offsets.begin(), index.offsets.end() - 1);
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
        for (VertexId v : tree.blocks[b].vertices) {
            index.entries[fill[v]++] = b;
        }
    }
    tree.articulation_vertices.clear();
    for (VertexId v = 0; v < n; ++v) {
        if (index[v].size() >= 2) {
            tree.articulation_vertices.push_back(v);
        }
    }
}

BlockCutTree block_cut_tree(const GameGraph& g) {
    if (g.directed()) {
        throw Error(ErrorCode::NotUndirected, "block-cut tree requires an undirected graph");
    }
    BlockCutTree tree = underlying_block_cut_tree(g);
    index_block_vertices(tree, g.vertex_count());
    return tree;
}

std::optional<std::vector<std::uint8_t>> two_coloring(const GameGraph& g) {
    const std::size_t n = g.vertex_count();
    const auto adj = undirected_adjacency(g);
    constexpr std::uint8_t kUnset = 2;
    std::vector<std::uint8_t> color(n, kUnset);
    std::deque<VertexId> queue;
    // Colour from the source first so that it always receives colour 0.
    std::vector<VertexId> roots{g.source()};
    for (VertexId v = 0; v < n; ++v) {
        roots.push_back(v);
    }
    for (VertexId root : roots) {
        if (color[root] != kUnset) {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (const auto& [w, e] : adj[v]) {
                if (color[w] == kUnset) {
                    color[w] = static_cast<std::uint8_t>(1 - color[v]);
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

GraphClass classify(const GameGraph& g) {
    GraphClass cls;
    cls.is_bipartite = two_coloring(g).has_value();

    if (g.directed()) {
        try {
            topological_order(g);
            cls.is_dag = true;
        } catch (const Error&) {
            cls.is_dag = false;
        }
    }

    const BlockCutTree tree = underlying_block_cut_tree(g);
    const bool cactus_shape = std::all_of(tree.blocks.begin(), tree.blocks.end(),
                                          [](const Block& b) { return b.is_bridge() || b.is_cycle(); });
    if (g.directed()) {
        cls.is_directed_cactus = cactus_shape;
    } else {
        cls.is_cactus = cactus_shape;
        cls.is_tree = std::all_of(tree.blocks.begin(), tree.blocks.end(), [](const Block& b) { return b.is_bridge(); });
    }
    cls.is_general = !(cls.is_tree || cls.is_dag || cls.is_cactus || cls.is_directed_cactus);
    return cls;
}

Cost cooperative_shortest_path(const GameGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<CostValue> dist(n, CostValue::top());
    using Item = std::pair<Cost, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[g.source()] = 0;
    heap.emplace(0, g.source());
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (CostValue(d) != dist[v]) {
            continue;
        }
        if (v == g.sink()) {
            return d;
        }
        for (const Arc& a : g.out(v)) {
            const CostValue nd = CostValue(d) + a.cost;
            if (nd < dist[a.to]) {
                dist[a.to] = nd;
                heap.emplace(nd.value(), a.to);
            }
        }
    }
    throw Error(ErrorCode::NoPathToSink, "sink is not reachable from source");
}

} // namespace spg
