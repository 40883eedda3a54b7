#include <gtest/gtest.h>

#include <random>

#include "spg/error.hpp"
#include "spg/game.hpp"
#include "test_support.hpp"

namespace spg {
namespace {

using testing::id_of;
using testing::load_fixture;
using testing::random_graph;

std::vector<VertexId> targets(const std::vector<Move>& moves) {
    std::vector<VertexId> out;
    for (const Move& m : moves) {
        out.push_back(m.next);
    }
    return out;
}

TEST(GameRulesTest, InitialState) {
    auto g = load_fixture("example2");
    auto st = initial_state(g);
    EXPECT_EQ(st.current, g.source());
    EXPECT_EQ(st.mover(), Player::A);
    EXPECT_EQ(st.visited.size(), 1U);
    EXPECT_TRUE(st.visited.contains(g.source(), 0));
    EXPECT_EQ(st.cost_a, 0);
    EXPECT_EQ(st.cost_b, 0);
    EXPECT_FALSE(is_terminal(g, st));
}

TEST(GameRulesTest, SourceEqualsSinkIsTerminal) {
    auto g = GameGraph::load(GraphSpec{false, 2, {{0, 1, 4}}, 1, 1, {}});
    auto st = initial_state(g);
    EXPECT_TRUE(is_terminal(g, st));
    EXPECT_THROW(legal_moves(g, st), Error);
}

TEST(GameRulesTest, ApplyMoveChargesMover) {
    auto g = load_fixture("example2");
    auto st = apply_move(g, initial_state(g), id_of(g, "a"));
    EXPECT_EQ(st.cost_a, 5);
    EXPECT_EQ(st.cost_b, 0);
    EXPECT_EQ(st.mover(), Player::B);
    EXPECT_TRUE(st.visited.contains(id_of(g, "a"), 1));
    auto st2 = apply_move(g, st, id_of(g, "b"));
    EXPECT_EQ(st2.cost_b, 2);
}

TEST(GameRulesTest, ZeroCostMove) {
    auto g = load_fixture("outerplanar");
    auto st = apply_move(g, initial_state(g), id_of(g, "a"));
    EXPECT_EQ(st.cost_a, 0);
    EXPECT_EQ(st.cost_b, 0);
}

TEST(GameRulesTest, Example1CycleCannotBeReentered) {
    auto g = load_fixture("example1");
    GameState st = initial_state(g);
    for (const char* v : {"v", "x", "y", "v"}) {
        st = apply_move(g, st, id_of(g, v));
    }
    EXPECT_EQ(st.mover(), Player::A);
    EXPECT_EQ(targets(legal_moves(g, st)), std::vector<VertexId>{id_of(g, "t")});
    EXPECT_EQ(violated_rule(g, st, id_of(g, "x")), Rule::R1);
}

TEST(GameRulesTest, Example1FirstVisitAllowsBoth) {
    auto g = load_fixture("example1");
    auto st = apply_move(g, initial_state(g), id_of(g, "v"));
    EXPECT_EQ(targets(legal_moves(g, st)), (std::vector<VertexId>{id_of(g, "x"), id_of(g, "t")}));
}

TEST(GameRulesTest, UndirectedBackMoveIsR2) {
    auto g = GameGraph::load(GraphSpec{false, 3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}}, 0, 2, {}});
    auto st = apply_move(g, initial_state(g), 1);
    EXPECT_EQ(violated_rule(g, st, 0), Rule::R2);
    try {
        apply_move(g, st, 0);
        FAIL() << "back-move accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IllegalMove);
        EXPECT_NE(std::string(e.what()).find("R2"), std::string::npos);
    }
    EXPECT_EQ(violated_rule(g, st, 1), Rule::NotAnEdge);
}

TEST(GameRulesTest, ReplayAccumulatesCosts) {
    auto g = load_fixture("example1");
    auto r = replay(g, {0, 1, 2, 3, 1, 4});
    EXPECT_EQ(r.moves, 5U);
    EXPECT_EQ(r.final_state.cost_a, 12);
    EXPECT_EQ(r.final_state.cost_b, 2);
    EXPECT_THROW(replay(g, {0, 1, 2, 3, 1, 2}), Error);
}

TEST(GameRulesPropertyTest, DagMovesAreSuccessorsReachingSink) {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 200; ++round) {
        auto g = GameGraph::load(random_graph(rng, 2 + round % 9, true, 0.4, 9));
        GraphSpec dag = g.spec(); // keep forward arcs only
        std::erase_if(dag.edges, [](const Edge& e) { return e.u > e.v; });
        auto d = GameGraph::load(dag);
        auto reach = vertices_reaching(d, d.sink());
        std::mt19937_64 walk_rng(round);
        GameState st = initial_state(d);
        while (!is_terminal(d, st)) {
            std::vector<VertexId> expected;
            for (const Arc& a : d.out(st.current)) {
                if (reach[a.to]) {
                    expected.push_back(a.to);
                }
            }
            auto moves = targets(legal_moves(d, st));
            ASSERT_EQ(moves, expected);
            st = apply_move(d, st, moves[walk_rng() % moves.size()]);
        }
    }
}

TEST(GameRulesPropertyTest, RandomPlaysNeverDeadlock) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 300; ++round) {
        auto g = GameGraph::load(random_graph(rng, 2 + round % 9, round % 2 == 0, 0.3, 9));
        GameState st = initial_state(g);
        std::size_t steps = 0;
        while (!is_terminal(g, st)) {
            auto moves = legal_moves(g, st);
            ASSERT_FALSE(moves.empty()) << "round " << round;
            st = apply_move(g, st, moves[rng() % moves.size()].next);
            ++steps;
        }
        EXPECT_LE(steps, 2 * (g.directed() ? g.edge_count() : 2 * g.edge_count()));
        EXPECT_EQ(st.visited.size(), steps + 1);
    }
}

} // namespace
} // namespace spg
