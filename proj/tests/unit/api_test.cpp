#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"
#include "spg/cactus.hpp"
#include "spg/dispatch.hpp"
#include "spg/error.hpp"
#include "spg/generators.hpp"
#include "spg/http_api.hpp"
#include "spg/session.hpp"
#include "test_support.hpp"

namespace spg {
namespace {

using nlohmann::json;
using testing::fixture;
using testing::id_of;
using testing::load_fixture;

GraphSpec undirected_example2() {
    GraphSpec spec = fixture("example2");
    spec.directed = false;
    return spec;
}

void expect_same(const Solution& got, const Solution& want, const std::string& what) {
    EXPECT_EQ(got.cost_a, want.cost_a) << what;
    EXPECT_EQ(got.cost_b, want.cost_b) << what;
}

TEST(Dispatch, AlgorithmNamesRoundTrip) {
    for (Algorithm a : {Algorithm::Auto, Algorithm::Engine, Algorithm::EngineDfs, Algorithm::Dag, Algorithm::Cactus,
                        Algorithm::DirectedCactus, Algorithm::Tree}) {
        EXPECT_EQ(parse_algorithm(to_string(a)), a);
    }
    EXPECT_THROW(parse_algorithm("fastest"), Error);
}

TEST(Dispatch, RoutesByClass) {
    EXPECT_EQ(choose_algorithm(load_fixture("example2")), Algorithm::Dag);
    EXPECT_EQ(choose_algorithm(load_fixture("example1")), Algorithm::DirectedCactus);
    EXPECT_EQ(choose_algorithm(GameGraph::load(gen_random_cactus(30, 4))), Algorithm::Cactus);
    EXPECT_EQ(choose_algorithm(GameGraph::load(parse_graph(
                  R"({"directed":false,"n":3,"edges":[[0,1,1],[1,2,1]],"s":0,"t":2})"))),
              Algorithm::Tree);
    EXPECT_EQ(choose_algorithm(load_fixture("outerplanar")), Algorithm::Engine);
}

TEST(Dispatch, Example2) {
    const GameGraph g = load_fixture("example2");
    const Solution sol = solve_with(g, Algorithm::Auto);
    EXPECT_EQ(sol.cost_a, 10);
    EXPECT_EQ(sol.cost_b, 2);
    EXPECT_EQ(walk_labels(g, sol.walk), "s,a,c,d,t");
    EXPECT_EQ(sol.algorithm, "dag");
    EXPECT_NO_THROW(verify_solution(g, sol));
}

TEST(Dispatch, VerifyRejectsWrongCosts) {
    const GameGraph g = load_fixture("example2");
    Solution sol = solve_with(g, Algorithm::Auto);
    sol.cost_b = 3;
    EXPECT_THROW(verify_solution(g, sol), Error);
}

TEST(Dispatch, ForcedAlgorithmOutsideClassFails) {
    try {
        solve_with(load_fixture("outerplanar"), Algorithm::Cactus);
        FAIL() << "expected NotCactus";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCactus);
    }
}

TEST(Dispatch, SolutionJson) {
    const GameGraph g = load_fixture("example2");
    const auto doc = solution_json(g, solve_with(g, Algorithm::Auto));
    EXPECT_EQ(doc["cost_a"], 10);
    EXPECT_EQ(doc["cost_b"], 2);
    EXPECT_EQ(doc["walk"], json::array({0, 1, 3, 4, 5}));
    EXPECT_EQ(doc["payers"], json::array({"A", "B", "A", "B"}));
}

// Auto dispatch against the engine, 200 instances per class.
TEST(Dispatch, AutoAgreesWithEngine) {
    std::mt19937_64 rng(91);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 2 + seed % 11;
        std::vector<std::pair<std::string, GraphSpec>> cases{
            {"cactus", gen_random_cactus(n, seed)},
            {"directed-cactus", gen_random_directed_cactus(n, seed)},
            {"dag", gen_random_dag(n, seed, 0.4)},
            {"general", testing::random_graph(rng, 2 + seed % 7, seed % 2 == 0, 0.4, 6)},
        };
        for (auto& [name, spec] : cases) {
            const GameGraph g = GameGraph::load(spec);
            const Solution want = solve(g);
            const Solution got = solve_with(g, Algorithm::Auto);
            expect_same(got, want, name + " seed " + std::to_string(seed));
            if (want.cost_a.is_top()) {
                continue;
            }
            EXPECT_NO_THROW(verify_solution(g, got)) << name << " seed " << seed;
        }
    }
}

TEST(Dispatch, AutoAgreesWithEngineOnTrees) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(seed);
        const std::size_t n = 2 + seed % 14;
        GraphSpec spec;
        spec.n = n;
        for (VertexId v = 1; v < n; ++v) {
            spec.edges.push_back({static_cast<VertexId>(rng() % v), v, static_cast<Cost>(1 + rng() % 9)});
        }
        spec.s = static_cast<VertexId>(rng() % n);
        spec.t = static_cast<VertexId>((spec.s + 1 + rng() % (n - 1)) % n);
        const GameGraph g = GameGraph::load(spec);
        ASSERT_EQ(choose_algorithm(g), Algorithm::Tree);
        const Solution got = solve_with(g, Algorithm::Auto);
        expect_same(got, solve(g), "tree seed " + std::to_string(seed));
        EXPECT_EQ(got.walk, solve(g).walk);
    }
}

TEST(SessionTest, EngineRepliesWithSpeMove) {
    Session session("x", load_fixture("example2"), {});
    EXPECT_TRUE(session.hints_enabled());
    const auto view = session.view();
    ASSERT_EQ(view["legal_moves"].size(), 1U);
    EXPECT_EQ(view["legal_moves"][0]["label"], "a");
    EXPECT_EQ(view["legal_moves"][0]["final"], json({{"A", 10}, {"B", 2}}));
    session.play(id_of(session.graph(), "a"));
    // B replied a -> c; A is to move at c.
    EXPECT_EQ(session.graph().name(session.state().current), "c");
    EXPECT_EQ(session.history().size(), 3U);
}

TEST(SessionTest, EngineOpensWhenHumanIsB) {
    Session session("x", load_fixture("example2"), {SessionMode::HumanVsEngine, Player::B, std::nullopt});
    EXPECT_EQ(session.graph().name(session.state().current), "a");
    EXPECT_EQ(session.state().mover(), Player::B);
}

TEST(SessionTest, HistoryReplaysToState) {
    const GameGraph g = GameGraph::load(gen_random_cactus(12, 5));
    Session session("x", g, {SessionMode::HumanVsHuman, Player::A, std::nullopt});
    std::mt19937_64 rng(5);
    while (!is_terminal(g, session.state())) {
        const auto moves = legal_moves(g, session.state());
        session.play(moves[rng() % moves.size()].next);
        const ReplayResult r = replay(g, session.history());
        EXPECT_EQ(r.final_state.current, session.state().current);
        EXPECT_EQ(r.final_state.cost_a, session.state().cost_a);
        EXPECT_EQ(r.final_state.cost_b, session.state().cost_b);
    }
    EXPECT_THROW(session.play(g.source()), ApiError);
}

TEST(SessionTest, HumanVsEngineDeviationStillGetsOptimalReplies) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const GameGraph g = GameGraph::load(gen_random_cactus(9, seed));
        Session session("x", g, {});
        std::mt19937_64 rng(seed);
        while (!is_terminal(g, session.state())) {
            const GameState before = session.state();
            const std::size_t played = session.history().size();
            const auto moves = legal_moves(g, before);
            const VertexId pick = moves[rng() % moves.size()].next;
            session.play(pick);
            if (session.history().size() == played + 2) {
                const WhatIf w = value_at(g, apply_move(g, before, pick));
                const auto best = std::min_element(w.options.begin(), w.options.end(), [](const auto& x, const auto& y) {
                    return rank_of(x.second, x.first.next) < rank_of(y.second, y.first.next);
                });
                EXPECT_EQ(session.history().back(), best->first.next) << "seed " << seed;
            }
        }
    }
}

TEST(SessionTest, StoreExpiresIdleSessions) {
    SessionStore store{std::chrono::seconds(0)};
    const auto s = store.create(load_fixture("example2"), {});
    EXPECT_EQ(s->id().size(), 16U);
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
    EXPECT_EQ(store.find(s->id()), nullptr);
    SessionStore keep;
    const auto t = keep.create(load_fixture("example2"), {});
    EXPECT_EQ(keep.find(t->id()), t);
    EXPECT_TRUE(keep.erase(t->id()));
    EXPECT_FALSE(keep.erase(t->id()));
}

class HttpApi : public ::testing::Test {
  protected:
    void SetUp() override {
        install_api(server_, store_);
        port_ = server_.bind_to_any_port("127.0.0.1");
        ASSERT_GT(port_, 0);
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
        client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    }

    void TearDown() override {
        server_.stop();
        thread_.join();
    }

    json post(const std::string& path, const json& body, int expect) {
        auto res = client_->Post(path, body.dump(), "application/json");
        EXPECT_TRUE(res);
        if (!res) {
            return {};
        }
        EXPECT_EQ(res->status, expect) << res->body;
        return res->body.empty() ? json() : json::parse(res->body);
    }

    json get(const std::string& path, int expect) {
        auto res = client_->Get(path);
        EXPECT_TRUE(res);
        if (!res) {
            return {};
        }
        EXPECT_EQ(res->status, expect) << res->body;
        return json::parse(res->body);
    }

    json example2_doc() { return json(graph_to_json(fixture("example2"))); }

    SessionStore store_;
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::unique_ptr<httplib::Client> client_;
};

TEST_F(HttpApi, Health) { EXPECT_EQ(get("/api/health", 200)["status"], "ok"); }

TEST_F(HttpApi, SolveExample2) {
    const json sol = post("/api/solve", example2_doc(), 200);
    EXPECT_EQ(sol["cost_a"], 10);
    EXPECT_EQ(sol["cost_b"], 2);
    EXPECT_EQ(sol["walk_labels"], json::array({"s", "a", "c", "d", "t"}));
    const json forced = post("/api/solve", {{"graph", example2_doc()}, {"algorithm", "engine"}}, 200);
    EXPECT_EQ(forced["algorithm"], "engine");
    EXPECT_EQ(forced["cost_a"], 10);
}

TEST_F(HttpApi, SolveErrors) {
    EXPECT_EQ(post("/api/solve", {{"graph", example2_doc()}, {"algorithm", "cactus"}}, 400)["error"],
              "NotCactus");
    json missing = example2_doc();
    missing.erase("t");
    EXPECT_EQ(post("/api/solve", missing, 400)["error"], "SchemaError");
    auto res = client_->Post("/api/solve", "{not json", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);
}

TEST_F(HttpApi, Example2SessionShowsWhatIf) {
    const json created = post("/api/sessions", {{"graph", example2_doc()}, {"human", "A"}}, 201);
    const std::string id = created["id"];
    const json view = get("/api/sessions/" + id, 200);
    ASSERT_EQ(view["legal_moves"].size(), 1U);
    const json& move = view["legal_moves"][0];
    EXPECT_EQ(move["label"], "a");
    EXPECT_EQ(move["what_if"], json({{"decider", 10}, {"follower", 2}}));
    EXPECT_EQ(view["state"]["current_label"], "s");
    EXPECT_EQ(view["state"]["cost_a"], 0);
}

TEST_F(HttpApi, FullGameOnSpeLineEndsAt10And2) {
    const std::string id = post("/api/sessions", {{"graph", example2_doc()}, {"human", "A"}}, 201)["id"];
    json view = post("/api/sessions/" + id + "/moves", {{"label", "a"}}, 200);
    EXPECT_EQ(view["state"]["current_label"], "c");
    view = post("/api/sessions/" + id + "/moves", {{"label", "d"}}, 200);
    EXPECT_TRUE(view["state"]["terminal"].get<bool>());
    EXPECT_EQ(view["state"]["cost_a"], 10);
    EXPECT_EQ(view["state"]["cost_b"], 2);
    EXPECT_EQ(view["history_labels"], "s,a,c,d,t");
    EXPECT_EQ(post("/api/sessions/" + id + "/moves", {{"label", "t"}}, 409)["error"], "GameOver");
}

TEST_F(HttpApi, BackMoveIsRejectedWithR2) {
    const json doc = json(graph_to_json(undirected_example2()));
    const std::string id =
        post("/api/sessions", {{"graph", doc}, {"mode", "human-vs-human"}}, 201)["id"];
    post("/api/sessions/" + id + "/moves", {{"label", "a"}}, 200);
    const json err = post("/api/sessions/" + id + "/moves", {{"label", "s"}}, 400);
    EXPECT_EQ(err["error"], "IllegalMove");
    EXPECT_EQ(err["rule"], "R2");
    EXPECT_EQ(get("/api/sessions/" + id, 200)["state"]["current_label"], "a");
}

TEST_F(HttpApi, NonEdgeIsRejected) {
    const std::string id = post("/api/sessions", {{"graph", example2_doc()}}, 201)["id"];
    const json err = post("/api/sessions/" + id + "/moves", {{"label", "t"}}, 400);
    EXPECT_EQ(err["error"], "IllegalMove");
    EXPECT_EQ(err["rule"], "edge");
}

TEST_F(HttpApi, OutOfTurnIs409) {
    const std::string id =
        post("/api/sessions", {{"graph", example2_doc()}, {"mode", "human-vs-human"}}, 201)["id"];
    EXPECT_EQ(post("/api/sessions/" + id + "/moves", {{"label", "a"}, {"player", "B"}}, 409)["error"],
              "OutOfTurn");
    post("/api/sessions/" + id + "/moves", {{"label", "a"}, {"player", "A"}}, 200);
    EXPECT_EQ(post("/api/sessions/" + id + "/moves", {{"label", "c"}, {"player", "A"}}, 409)["error"],
              "OutOfTurn");
}

TEST_F(HttpApi, UnknownSessionIs404) {
    EXPECT_EQ(get("/api/sessions/0123456789abcdef", 404)["error"], "UnknownSession");
    post("/api/sessions/0123456789abcdef/moves", {{"to", 1}}, 404);
    auto res = client_->Delete("/api/sessions/0123456789abcdef");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 404);
}

TEST_F(HttpApi, DeleteEndsSession) {
    const std::string id = post("/api/sessions", {{"graph", example2_doc()}}, 201)["id"];
    auto res = client_->Delete("/api/sessions/" + id);
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 204);
    get("/api/sessions/" + id, 404);
}

TEST_F(HttpApi, ConcurrentMovesOnOneSessionAreSerialized) {
    const json doc = json(graph_to_json(gen_random_cactus(10, 3)));
    const std::string id = post("/api/sessions", {{"graph", doc}, {"mode", "human-vs-human"}}, 201)["id"];
    const json view = get("/api/sessions/" + id, 200);
    const VertexId first = view["legal_moves"][0]["to"];
    std::vector<std::thread> racers;
    std::atomic<int> accepted{0};
    for (int i = 0; i < 4; ++i) {
        racers.emplace_back([&] {
            httplib::Client c("127.0.0.1", port_);
            auto res = c.Post("/api/sessions/" + id + "/moves", json{{"to", first}, {"player", "A"}}.dump(),
                              "application/json");
            if (res && res->status == 200) {
                ++accepted;
            }
        });
    }
    for (auto& t : racers) {
        t.join();
    }
    EXPECT_EQ(accepted.load(), 1);
    EXPECT_EQ(get("/api/sessions/" + id, 200)["history"].size(), 2U);
}

} // namespace
} // namespace spg
