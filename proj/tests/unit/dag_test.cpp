#include <gtest/gtest.h>

#include <set>

#include "spg/dag.hpp"
#include "spg/error.hpp"
#include "spg/generators.hpp"
#include "test_support.hpp"

namespace spg {
namespace {

using testing::id_of;
using testing::load_fixture;

bool distinct_costs(const GraphSpec& spec) {
    std::set<Cost> seen;
    for (const Edge& e : spec.edges) {
        if (!seen.insert(e.cost).second) {
            return false;
        }
    }
    return true;
}

TEST(DagTest, Example2) {
    auto g = load_fixture("example2");
    auto sol = solve_dag(g);
    EXPECT_EQ(sol.cost_a, 10);
    EXPECT_EQ(sol.cost_b, 2);
    std::vector<VertexId> want;
    for (const char* v : {"s", "a", "c", "d", "t"}) {
        want.push_back(id_of(g, v));
    }
    EXPECT_EQ(sol.walk, want);
    EXPECT_EQ(sol.algorithm, "dag");
}

TEST(DagTest, SingleArc) {
    auto sol = solve_dag(GameGraph::load(GraphSpec{true, 2, {{0, 1, 9}}, 0, 1, {}}));
    EXPECT_EQ(sol.cost_a, 9);
    EXPECT_EQ(sol.cost_b, 0);
}

TEST(DagTest, DiamondTieGoesToLowerId) {
    GraphSpec spec{true, 4, {{0, 2, 1}, {0, 1, 1}, {2, 3, 5}, {1, 3, 5}}, 0, 3, {}};
    auto g = GameGraph::load(spec);
    EXPECT_EQ(solve_dag(g).walk, (std::vector<VertexId>{0, 1, 3}));
    EXPECT_EQ(solve(g).walk, solve_dag(g).walk);
}

TEST(DagTest, TablesAtSinkAndDeadEnds) {
    // vertex 2 has no path to t
    auto g = GameGraph::load(GraphSpec{true, 4, {{0, 1, 1}, {1, 3, 2}, {0, 2, 1}}, 0, 3, {}});
    auto tables = dag_tables(g);
    EXPECT_EQ(tables.p_d[3], CostValue(0));
    EXPECT_EQ(tables.p_f[3], CostValue(0));
    EXPECT_TRUE(tables.p_d[2].is_top());
    EXPECT_TRUE(tables.p_f[2].is_top());
    EXPECT_EQ(tables.choice[0], 1U);
    EXPECT_EQ(tables.arcs_evaluated, g.edge_count());
}

TEST(DagTest, RejectsCyclesAndUndirected) {
    for (const char* name : {"example1", "outerplanar"}) {
        try {
            solve_dag(load_fixture(name));
            FAIL() << name;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotADag);
        }
    }
}

TEST(DagTest, GeneratorIsAcyclicAndDeterministic) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto spec = gen_random_dag(2 + seed % 30, seed, 0.3);
        EXPECT_TRUE(classify(GameGraph::load(spec)).is_dag);
        EXPECT_EQ(spec, gen_random_dag(2 + seed % 30, seed, 0.3));
    }
    EXPECT_EQ(gen_random_dag(2, 1, 0.5).edges.size(), 1U);
}

TEST(DagDifferentialTest, MatchesEngine) {
    std::size_t walks_compared = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto spec = gen_random_dag(2 + seed % 9, seed, 0.4, {0, 20});
        const auto g = GameGraph::load(spec);
        const Solution want = solve(g);
        const Solution got = solve_dag(g);
        ASSERT_EQ(got.cost_a, want.cost_a) << serialize_graph(spec);
        ASSERT_EQ(got.cost_b, want.cost_b) << serialize_graph(spec);
        if (distinct_costs(spec)) {
            ASSERT_EQ(got.walk, want.walk) << serialize_graph(spec);
            ++walks_compared;
        }
        const auto tables = dag_tables(g);
        EXPECT_EQ(tables.arcs_evaluated, g.edge_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (tables.p_d[v].finite() && v != g.sink()) {
                EXPECT_EQ(tables.p_f[v], tables.p_d[tables.choice[v]]);
            }
        }
    }
    EXPECT_GT(walks_compared, 100U);
}

} // namespace
} // namespace spg
