#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "spg/error.hpp"
#include "spg/graph.hpp"
#include "test_support.hpp"

namespace spg {
namespace {

using testing::load_fixture;
using testing::random_graph;

GraphSpec make(bool directed, std::size_t n, std::vector<Edge> edges, VertexId s, VertexId t) {
    return GraphSpec{directed, n, std::move(edges), s, t, {}};
}

ErrorCode load_error(const GraphSpec& spec, LoadOptions opts = {}) {
    try {
        GameGraph::load(spec, opts);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "load succeeded";
    return ErrorCode::MalformedInput;
}

TEST(LoadTest, SingleArc) {
    auto g = GameGraph::load(make(true, 2, {{0, 1, 3}}, 0, 1));
    EXPECT_EQ(g.vertex_count(), 2U);
    EXPECT_EQ(g.arc_cost(0, 1), 3);
    EXPECT_FALSE(g.arc_cost(1, 0).has_value());
}

TEST(LoadTest, Example2IsDag) {
    auto g = load_fixture("example2");
    EXPECT_EQ(g.vertex_count(), 6U);
    EXPECT_TRUE(classify(g).is_dag);
}

TEST(LoadTest, Rejections) {
    EXPECT_EQ(load_error(make(true, 3, {{0, 1, 1}}, 0, 2)), ErrorCode::NoPathToSink);
    EXPECT_EQ(load_error(make(true, 2, {{1, 0, 1}}, 0, 1)), ErrorCode::NoPathToSink);
    EXPECT_EQ(load_error(make(true, 2, {{0, 1, -1}}, 0, 1)), ErrorCode::NegativeCost);
    EXPECT_EQ(load_error(make(true, 2, {{0, 0, 1}, {0, 1, 1}}, 0, 1)), ErrorCode::SelfLoop);
    EXPECT_EQ(load_error(make(false, 2, {{0, 1, 1}, {1, 0, 2}}, 0, 1)), ErrorCode::ParallelEdge);
    EXPECT_EQ(load_error(make(true, 2, {{0, 1, 1}, {0, 1, 2}}, 0, 1)), ErrorCode::ParallelEdge);
    EXPECT_EQ(load_error(make(true, 2, {{0, 5, 1}}, 0, 1)), ErrorCode::MalformedInput);
    EXPECT_EQ(load_error(make(true, 2, {{0, 1, 0}}, 0, 1), {.strict_positive = true}), ErrorCode::ZeroCost);
}

TEST(LoadTest, AntiparallelArcsAreDistinct) {
    auto g = GameGraph::load(make(true, 2, {{0, 1, 1}, {1, 0, 2}}, 0, 1));
    EXPECT_EQ(g.arc_cost(1, 0), 2);
}

TEST(LoadTest, UndirectedArcsBothWays) {
    auto g = GameGraph::load(make(false, 3, {{2, 0, 4}, {0, 1, 1}}, 0, 2));
    ASSERT_EQ(g.out(0).size(), 2U);
    EXPECT_EQ(g.out(0)[0].to, 1U);
    EXPECT_EQ(g.out(0)[1].to, 2U);
    EXPECT_EQ(g.arc_cost(2, 0), 4);
}

TEST(ClassifyTest, PathIsTreeAndCactus) {
    auto cls = classify(GameGraph::load(make(false, 3, {{0, 1, 1}, {1, 2, 1}}, 0, 2)));
    EXPECT_TRUE(cls.is_tree);
    EXPECT_TRUE(cls.is_cactus);
    EXPECT_FALSE(cls.is_general);
}

TEST(ClassifyTest, K4IsNotCactus) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < 4; ++u) {
        for (VertexId v = u + 1; v < 4; ++v) {
            edges.push_back({u, v, 1});
        }
    }
    auto cls = classify(GameGraph::load(make(false, 4, edges, 0, 3)));
    EXPECT_FALSE(cls.is_cactus);
    EXPECT_FALSE(cls.is_bipartite);
    EXPECT_TRUE(cls.is_general);
}

TEST(ClassifyTest, DirectedCactusNeedsCactusShape) {
    auto cyc = classify(GameGraph::load(make(true, 3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, 0, 2)));
    EXPECT_TRUE(cyc.is_directed_cactus);
    EXPECT_FALSE(cyc.is_dag);
    auto anti = classify(GameGraph::load(make(true, 2, {{0, 1, 1}, {1, 0, 1}}, 0, 1)));
    EXPECT_FALSE(anti.is_directed_cactus);
}

TEST(ClassifyTest, OuterplanarIsGeneral) {
    auto cls = classify(load_fixture("outerplanar"));
    EXPECT_FALSE(cls.is_cactus);
    EXPECT_TRUE(cls.is_general);
}

TEST(TopologicalOrderTest, Example2) {
    auto g = load_fixture("example2");
    auto order = topological_order(g);
    ASSERT_EQ(order.size(), 6U);
    std::vector<std::size_t> pos(6);
    for (std::size_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = i;
    }
    for (const Edge& e : g.edges()) {
        EXPECT_LT(pos[e.u], pos[e.v]);
    }
    EXPECT_EQ(order.front(), g.source());
    EXPECT_EQ(order.back(), g.sink());
}

TEST(TopologicalOrderTest, SingleVertexAndCycle) {
    EXPECT_EQ(topological_order(GameGraph::load(make(true, 1, {}, 0, 0))), std::vector<VertexId>{0});
    auto tri = GameGraph::load(make(true, 3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, 0, 2));
    EXPECT_THROW(topological_order(tri), Error);
}

TEST(ReachTest, Example2AllReachSink) {
    auto g = load_fixture("example2");
    auto mask = vertices_reaching(g, g.sink());
    EXPECT_TRUE(std::all_of(mask.begin(), mask.end(), [](bool b) { return b; }));
}

TEST(ReachTest, IsolatedVertexExcluded) {
    auto g = GameGraph::load(make(false, 4, {{0, 1, 1}, {1, 2, 1}}, 0, 2));
    auto mask = vertices_reaching(g, g.sink());
    EXPECT_EQ(mask, (std::vector<bool>{true, true, true, false}));
}

TEST(ReachTest, MatchesForwardSearchOnRandomGraphs) {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 2 + round % 11;
        auto g = GameGraph::load(random_graph(rng, n, round % 2 == 0, 0.2, 5));
        for (VertexId target = 0; target < n; ++target) {
            auto mask = vertices_reaching(g, target);
            for (VertexId v = 0; v < n; ++v) {
                EXPECT_EQ(mask[v], vertices_reachable_from(g, v)[target]);
            }
        }
    }
}

TEST(BlockCutTreeTest, TriangleWithPendant) {
    auto g = GameGraph::load(make(false, 4, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}}, 0, 3));
    auto tree = block_cut_tree(g);
    ASSERT_EQ(tree.blocks.size(), 2U);
    EXPECT_EQ(std::count_if(tree.blocks.begin(), tree.blocks.end(), [](const Block& b) { return b.is_cycle(); }), 1);
    EXPECT_EQ(tree.articulation_vertices, std::vector<VertexId>{2});
}

TEST(BlockCutTreeTest, TreeEdgesAreBlocks) {
    auto g = GameGraph::load(make(false, 5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 4, 1}}, 0, 4));
    auto tree = block_cut_tree(g);
    EXPECT_EQ(tree.blocks.size(), 4U);
    EXPECT_TRUE(std::all_of(tree.blocks.begin(), tree.blocks.end(), [](const Block& b) { return b.is_bridge(); }));
    EXPECT_EQ(tree.articulation_vertices, (std::vector<VertexId>{1, 3}));
}

TEST(BlockCutTreeTest, BowTie) {
    auto g = GameGraph::load(make(false, 5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}, {3, 4, 1}, {4, 2, 1}}, 0, 4));
    auto tree = block_cut_tree(g);
    ASSERT_EQ(tree.blocks.size(), 2U);
    EXPECT_TRUE(tree.blocks[0].is_cycle() && tree.blocks[1].is_cycle());
    EXPECT_EQ(tree.articulation_vertices, std::vector<VertexId>{2});
}

TEST(BlockCutTreeTest, RejectsDirected) {
    EXPECT_THROW(block_cut_tree(load_fixture("example2")), Error);
}

// Brute force: an edge lies on at most one simple cycle for every edge.
bool cactus_by_enumeration(const GameGraph& g) {
    const auto edges = g.edges();
    std::vector<int> cycles(edges.size(), 0);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].u].emplace_back(edges[e].v, e);
        adj[edges[e].v].emplace_back(edges[e].u, e);
    }
    std::vector<bool> on_path(n, false);
    std::vector<std::size_t> path_edges;
    // Enumerate each cycle once from its smallest vertex and its smaller-id first edge.
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId root, VertexId v) {
        for (const auto& [w, e] : adj[v]) {
            if (!path_edges.empty() && e == path_edges.back()) {
                continue;
            }
            if (w == root && path_edges.size() >= 2 && path_edges.front() < e) {
                for (std::size_t pe : path_edges) {
                    ++cycles[pe];
                }
                ++cycles[e];
            } else if (w > root && !on_path[w]) {
                on_path[w] = true;
                path_edges.push_back(e);
                dfs(root, w);
                path_edges.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (VertexId r = 0; r < n; ++r) {
        on_path[r] = true;
        dfs(r, r);
        on_path[r] = false;
    }
    return std::all_of(cycles.begin(), cycles.end(), [](int c) { return c <= 1; });
}

TEST(ClassifyTest, CactusAgreesWithCycleEnumeration) {
    std::mt19937_64 rng(11);
    int cacti = 0;
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 3 + round % 8;
        auto g = GameGraph::load(random_graph(rng, n, false, 0.15, 3));
        const bool expected = cactus_by_enumeration(g);
        cacti += expected ? 1 : 0;
        EXPECT_EQ(classify(g).is_cactus, expected) << "round " << round;
        auto tree = block_cut_tree(g);
        const bool blocks_ok = std::all_of(tree.blocks.begin(), tree.blocks.end(),
                                           [](const Block& b) { return b.is_bridge() || b.is_cycle(); });
        EXPECT_EQ(blocks_ok, expected);
    }
    EXPECT_GT(cacti, 50);
}

TEST(ShortestPathTest, Fixtures) {
    EXPECT_EQ(cooperative_shortest_path(load_fixture("example2")), 9);
    EXPECT_EQ(cooperative_shortest_path(GameGraph::load(make(true, 2, {{0, 1, 3}}, 0, 1))), 3);
    EXPECT_EQ(cooperative_shortest_path(load_fixture("poa")), 2);
}

Cost brute_shortest(const GameGraph& g, VertexId v, std::vector<bool>& seen) {
    if (v == g.sink()) {
        return 0;
    }
    Cost best = std::numeric_limits<Cost>::max();
    for (const Arc& a : g.out(v)) {
        if (seen[a.to]) {
            continue;
        }
        seen[a.to] = true;
        const Cost rest = brute_shortest(g, a.to, seen);
        seen[a.to] = false;
        if (rest != std::numeric_limits<Cost>::max()) {
            best = std::min(best, a.cost + rest);
        }
    }
    return best;
}

TEST(ShortestPathTest, MatchesSimplePathEnumeration) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        auto g = GameGraph::load(random_graph(rng, 2 + round % 9, round % 3 == 0, 0.35, 20));
        std::vector<bool> seen(g.vertex_count(), false);
        seen[g.source()] = true;
        EXPECT_EQ(cooperative_shortest_path(g), brute_shortest(g, g.source(), seen));
    }
}

TEST(TwoColoringTest, SourceGetsColourZero) {
    auto g = GameGraph::load(make(false, 4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, 2, 0));
    auto colors = two_coloring(g);
    ASSERT_TRUE(colors.has_value());
    EXPECT_EQ((*colors)[2], 0);
    EXPECT_EQ((*colors)[1], 1);
    EXPECT_FALSE(two_coloring(GameGraph::load(make(false, 3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, 0, 2))));
}

} // namespace
} // namespace spg
