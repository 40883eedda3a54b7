#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "httplib.h"
#include "spg/dispatch.hpp"
#include "spg/error.hpp"
#include "spg/generators.hpp"
#include "spg/http_api.hpp"
#include "spg/io.hpp"
#include "spg/reductions.hpp"
#include "spg/session.hpp"

namespace {

using namespace spg;

constexpr int kModuleFailure = 2;

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw Error(ErrorCode::MalformedInput, "cannot write " + out_path);
    }
    out << text;
}

GameGraph load(const std::string& path, bool strict) {
    return GameGraph::load(read_graph_file(path), LoadOptions{strict});
}

std::string show(const CostValue& c) { return c.is_top() ? "inf" : std::to_string(c.value()); }

struct SolveArgs {
    std::string file;
    std::string algorithm = "auto";
    bool json = false;
    bool verify = false;
    bool strict = false;
};

int run_solve(const SolveArgs& args) {
    const GameGraph g = load(args.file, args.strict);
    const Solution sol = solve_with(g, parse_algorithm(args.algorithm));
    if (args.verify) {
        verify_solution(g, sol);
    }
    if (args.json) {
        std::cout << solution_json(g, sol).dump(2) << "\n";
        return 0;
    }
    std::cout << "A=" << show(sol.cost_a) << " B=" << show(sol.cost_b) << " path=" << walk_labels(g, sol.walk)
              << "\n";
    std::cout << "algorithm=" << sol.algorithm << " nodes=" << sol.node_count << "\n";
    return 0;
}

struct GenArgs {
    std::string kind;
    std::size_t n = 10;
    std::uint64_t seed = 1;
    Cost lo = 1;
    Cost hi = 20;
    bool distinct = false;
    double p = 0.3;
    std::string out;
};

int run_gen(const GenArgs& args) {
    const CostRange costs{args.lo, args.hi};
    if (args.kind == "geography") {
        emit(serialize_geography(gen_random_geography(args.n, args.seed, args.p)), args.out);
        return 0;
    }
    GraphSpec spec;
    if (args.kind == "cactus") {
        spec = gen_random_cactus(args.n, args.seed, costs, args.distinct);
    } else if (args.kind == "directed-cactus") {
        spec = gen_random_directed_cactus(args.n, args.seed, costs, args.distinct);
    } else {
        spec = gen_random_dag(args.n, args.seed, args.p, costs);
    }
    emit(serialize_graph(spec), args.out);
    return 0;
}

struct ReduceArgs {
    std::string kind;
    std::string file;
    std::string out;
};

int run_reduce(const ReduceArgs& args) {
    const std::string text = read_text(args.file);
    const ReductionOutput red =
        args.kind == "geography" ? geography_to_spg(parse_geography(text)) : qsat_to_spg(parse_qsat(text));
    GameGraph::load(red.graph);
    emit(serialize_graph(red.graph), args.out);
    std::cerr << "C_A=" << red.c_a << " C_B=" << red.c_b << "\n";
    return 0;
}

int run_check(const std::string& file) {
    const GameGraph g = load(file, false);
    const GraphClass c = classify(g);
    std::cout << "valid n=" << g.vertex_count() << " edges=" << g.edge_count()
              << " directed=" << (g.directed() ? "yes" : "no") << "\n";
    std::cout << "is_tree=" << c.is_tree << " is_dag=" << c.is_dag << " is_cactus=" << c.is_cactus
              << " is_directed_cactus=" << c.is_directed_cactus << " is_bipartite=" << c.is_bipartite
              << " is_general=" << c.is_general << "\n";
    std::cout << "algorithm=" << to_string(choose_algorithm(g)) << "\n";
    return 0;
}

struct PlayArgs {
    std::string file;
    std::string engine = "B";
    bool hints = true;
};

int run_play(const PlayArgs& args) {
    GameGraph g = load(args.file, false);
    SessionOptions options;
    if (args.engine == "none") {
        options.mode = SessionMode::HumanVsHuman;
    } else {
        options.human = args.engine == "A" ? Player::B : Player::A;
    }
    options.hints = args.hints;
    Session session("local", std::move(g), options);
    const GameGraph& graph = session.graph();
    std::string line;
    for (;;) {
        const auto view = session.view();
        const GameState& st = session.state();
        std::cout << "at " << graph.name(st.current) << "  A=" << st.cost_a << " B=" << st.cost_b
                  << "  path=" << walk_labels(graph, session.history()) << "\n";
        if (is_terminal(graph, st)) {
            std::cout << "reached " << graph.name(graph.sink()) << ": A paid " << st.cost_a << ", B paid " << st.cost_b
                      << "\n";
            return 0;
        }
        std::cout << player_name(st.mover()) << " to move:\n";
        const auto& moves = view["legal_moves"];
        for (std::size_t i = 0; i < moves.size(); ++i) {
            std::cout << "  [" << i << "] " << moves[i]["label"].get<std::string>() << " cost "
                      << moves[i]["cost"].get<Cost>();
            if (moves[i].contains("final")) {
                std::cout << "  -> A=" << moves[i]["final"]["A"] << " B=" << moves[i]["final"]["B"];
            }
            std::cout << "\n";
        }
        std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line) || line == "q" || line == "quit") {
            return 0;
        }
        VertexId next = kNoVertex;
        try {
            const std::size_t index = std::stoul(line);
            if (index < moves.size()) {
                next = moves[index]["to"].get<VertexId>();
            }
        } catch (const std::exception&) {
            for (const auto& m : moves) {
                if (m["label"] == line) {
                    next = m["to"].get<VertexId>();
                }
            }
        }
        if (next == kNoVertex) {
            std::cout << "no such move: " << line << "\n";
            continue;
        }
        try {
            session.play(next);
        } catch (const ApiError& e) {
            std::cout << e.what() << "\n";
        }
    }
}

struct ServeArgs {
    std::string host = "127.0.0.1";
    int port = 8080;
    int ttl = 1800;
};

int run_serve(const ServeArgs& args) {
    SessionStore store{std::chrono::seconds(args.ttl)};
    httplib::Server server;
    install_api(server, store);
    std::cerr << "listening on http://" << args.host << ":" << args.port << "\n";
    if (!server.listen(args.host, args.port)) {
        throw Error(ErrorCode::MalformedInput, "cannot listen on " + args.host + ":" + std::to_string(args.port));
    }
    return 0;
}

struct BenchArgs {
    std::string kind;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 7;
    int repeat = 3;
};

double log_log_slope(const std::vector<std::size_t>& sizes, const std::vector<double>& seconds) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double x = std::log(static_cast<double>(sizes[i]));
        const double y = std::log(seconds[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

int run_bench(BenchArgs args) {
    if (args.sizes.empty()) {
        args.sizes = {1000, 2000, 4000, 8000};
    }
    std::vector<double> seconds;
    for (std::size_t n : args.sizes) {
        GraphSpec spec;
        Algorithm algorithm = Algorithm::Cactus;
        if (args.kind == "cactus") {
            spec = gen_random_cactus(n, args.seed);
        } else if (args.kind == "directed-cactus") {
            spec = gen_random_directed_cactus(n, args.seed);
            algorithm = Algorithm::DirectedCactus;
        } else {
            spec = gen_random_dag(n, args.seed, 4.0 / static_cast<double>(n));
            algorithm = Algorithm::Dag;
        }
        const GameGraph g = GameGraph::load(spec);
        double best = 1e300;
        for (int r = 0; r < args.repeat; ++r) {
            const auto start = std::chrono::steady_clock::now();
            solve_with(g, algorithm);
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        seconds.push_back(std::max(best, 1e-9));
        std::cout << "n=" << n << " edges=" << g.edge_count() << " seconds=" << best << "\n";
    }
    if (args.sizes.size() >= 2) {
        std::cout << "slope=" << log_log_slope(args.sizes, seconds) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shortest path game solver"};
    app.require_subcommand(1);
    int status = 0;
    std::function<int()> action;

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Compute the subgame perfect equilibrium path");
    solve_cmd->add_option("file", solve_args.file, "Graph JSON file")->required();
    solve_cmd->add_option("--algorithm", solve_args.algorithm,
                          "auto, engine, engine-dfs, dag, cactus, directed-cactus or tree");
    solve_cmd->add_flag("--json", solve_args.json, "Print the solution as JSON");
    solve_cmd->add_flag("--verify", solve_args.verify, "Replay the walk through the game rules");
    solve_cmd->add_flag("--strict", solve_args.strict, "Reject zero-cost edges");
    solve_cmd->callback([&] { action = [&] { return run_solve(solve_args); }; });

    std::string spgd_file;
    std::string spgd_algorithm = "auto";
    Cost bound_a = 0;
    Cost bound_b = 0;
    auto* spgd_cmd = app.add_subcommand("spgd", "Decide whether the equilibrium meets both cost bounds");
    spgd_cmd->add_option("file", spgd_file)->required();
    spgd_cmd->add_option("--ca", bound_a, "Bound for A")->required();
    spgd_cmd->add_option("--cb", bound_b, "Bound for B")->required();
    spgd_cmd->add_option("--algorithm", spgd_algorithm);
    spgd_cmd->callback([&] {
        action = [&] {
            const GameGraph g = load(spgd_file, false);
            std::cout << (spgd(solve_with(g, parse_algorithm(spgd_algorithm)), bound_a, bound_b) ? "yes" : "no")
                      << "\n";
            return 0;
        };
    });

    std::string poa_file;
    std::string poa_algorithm = "auto";
    auto* poa_cmd = app.add_subcommand("poa", "Price of anarchy of the equilibrium path");
    poa_cmd->add_option("file", poa_file)->required();
    poa_cmd->add_option("--algorithm", poa_algorithm);
    poa_cmd->callback([&] {
        action = [&] {
            const GameGraph g = load(poa_file, false);
            std::cout << price_of_anarchy(g, solve_with(g, parse_algorithm(poa_algorithm))).str() << "\n";
            return 0;
        };
    });

    std::string check_file;
    auto* check_cmd = app.add_subcommand("check", "Validate and classify a graph");
    check_cmd->add_option("file", check_file)->required();
    check_cmd->callback([&] { action = [&] { return run_check(check_file); }; });

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("kind", gen_args.kind)
        ->required()
        ->check(CLI::IsMember({"cactus", "directed-cactus", "dag", "geography"}));
    gen_cmd->add_option("--n", gen_args.n, "Vertex count")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    gen_cmd->add_option("--seed", gen_args.seed);
    gen_cmd->add_option("--min-cost", gen_args.lo);
    gen_cmd->add_option("--max-cost", gen_args.hi);
    gen_cmd->add_flag("--distinct", gen_args.distinct, "Pairwise distinct costs");
    gen_cmd->add_option("--p", gen_args.p, "Arc probability (dag, geography)");
    gen_cmd->add_option("-o,--output", gen_args.out);
    gen_cmd->callback([&] { action = [&] { return run_gen(gen_args); }; });

    ReduceArgs reduce_args;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build an SPG instance from geography or QSAT");
    reduce_cmd->add_option("kind", reduce_args.kind)->required()->check(CLI::IsMember({"geography", "qsat"}));
    reduce_cmd->add_option("file", reduce_args.file)->required();
    reduce_cmd->add_option("-o,--output", reduce_args.out);
    reduce_cmd->callback([&] { action = [&] { return run_reduce(reduce_args); }; });

    PlayArgs play_args;
    auto* play_cmd = app.add_subcommand("play", "Play interactively in the terminal");
    play_cmd->add_option("file", play_args.file)->required();
    play_cmd->add_option("--engine", play_args.engine, "Side played by the engine: A, B or none")
        ->check(CLI::IsMember({"A", "B", "none"}));
    play_cmd->add_flag("--hints,!--no-hints", play_args.hints, "Show equilibrium outcomes of each move");
    play_cmd->callback([&] { action = [&] { return run_play(play_args); }; });

    ServeArgs serve_args;
    auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP API");
    serve_cmd->add_option("--host", serve_args.host);
    serve_cmd->add_option("--port", serve_args.port);
    serve_cmd->add_option("--ttl", serve_args.ttl, "Idle session timeout in seconds");
    serve_cmd->callback([&] { action = [&] { return run_serve(serve_args); }; });

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time a structured solver on generated instances");
    bench_cmd->add_option("kind", bench_args.kind)
        ->required()
        ->check(CLI::IsMember({"cactus", "directed-cactus", "dag"}));
    bench_cmd->add_option("--sizes", bench_args.sizes)->delimiter(',');
    bench_cmd->add_option("--seed", bench_args.seed);
    bench_cmd->add_option("--repeat", bench_args.repeat)->check(CLI::PositiveNumber);
    bench_cmd->callback([&] { action = [&] { return run_bench(bench_args); }; });

    CLI11_PARSE(app, argc, argv);
    try {
        status = action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kModuleFailure;
    }
    return status;
}
