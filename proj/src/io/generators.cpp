#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "spg/error.hpp"
#include "spg/generators.hpp"

namespace spg {

namespace {

void require_size(std::size_t n) {
    if (n < 2) {
        throw Error(ErrorCode::MalformedInput, "generator needs n >= 2");
    }
}

void assign_costs(GraphSpec& spec, std::mt19937_64& rng, CostRange costs, bool distinct) {
    if (distinct) {
        std::vector<Cost> values(spec.edges.size());
        std::iota(values.begin(), values.end(), costs.lo);
        std::shuffle(values.begin(), values.end(), rng);
        for (std::size_t i = 0; i < values.size(); ++i) {
            spec.edges[i].cost = values[i];
        }
        return;
    }
    std::uniform_int_distribution<Cost> pick(costs.lo, costs.hi);
    for (Edge& e : spec.edges) {
        e.cost = pick(rng);
    }
}

GraphSpec cactus_shape(std::size_t n, std::mt19937_64& rng) {
    GraphSpec spec;
    spec.n = n;
    VertexId next = 1;
    while (next < n) {
        const auto anchor = static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, next - 1)(rng));
        const std::size_t room = n - next;
        std::size_t length = 2;
        if (room >= 2 && rng() % 2 == 0) {
            length = std::uniform_int_distribution<std::size_t>(3, std::min<std::size_t>(7, room + 1))(rng);
        }
        VertexId prev = anchor;
        for (std::size_t i = 1; i < length; ++i) {
            spec.edges.push_back({prev, next, 0});
            prev = next++;
        }
        if (length > 2) {
            spec.edges.push_back({prev, anchor, 0});
        }
    }
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
    spec.s = vertex(rng);
    do {
        spec.t = vertex(rng);
    } while (spec.t == spec.s);
    return spec;
}

} // namespace

GraphSpec gen_random_cactus(std::size_t n, std::uint64_t seed, CostRange costs, bool distinct) {
    require_size(n);
    std::mt19937_64 rng(seed);
    GraphSpec spec = cactus_shape(n, rng);
    assign_costs(spec, rng, costs, distinct);
    return spec;
}

GraphSpec gen_random_directed_cactus(std::size_t n, std::uint64_t seed, CostRange costs, bool distinct) {
    require_size(n);
    std::mt19937_64 rng(seed);
    GraphSpec spec = cactus_shape(n, rng);
    spec.directed = true;
    for (Edge& e : spec.edges) {
        if (rng() % 2 == 0) {
            std::swap(e.u, e.v);
        }
    }
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
        adj[spec.edges[i].u].push_back({spec.edges[i].v, i});
        adj[spec.edges[i].v].push_back({spec.edges[i].u, i});
    }
    std::vector<std::size_t> via(n, spec.edges.size());
    std::vector<std::uint8_t> seen(n, 0);
    std::queue<VertexId> queue;
    queue.push(spec.s);
    seen[spec.s] = 1;
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop();
        for (auto [w, e] : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                via[w] = e;
                queue.push(w);
            }
        }
    }
    for (VertexId v = spec.t; v != spec.s;) {
        Edge& e = spec.edges[via[v]];
        const VertexId from = e.u == v ? e.v : e.u;
        e.u = from;
        e.v = v;
        v = from;
    }
    assign_costs(spec, rng, costs, distinct);
    return spec;
}

GraphSpec gen_random_dag(std::size_t n, std::uint64_t seed, double arc_probability, CostRange costs) {
    require_size(n);
    if (!(arc_probability > 0.0 && arc_probability <= 1.0)) {
        throw Error(ErrorCode::MalformedInput, "arc probability must be in (0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    // Gaps between sampled targets are geometric, so sparse instances stay linear.
    std::geometric_distribution<std::size_t> geometric(arc_probability < 1.0 ? arc_probability : 0.5);
    auto gap = [&](std::mt19937_64& r) -> std::size_t { return arc_probability < 1.0 ? geometric(r) : 0; };
    GraphSpec spec;
    spec.directed = true;
    spec.n = n;
    spec.s = order.front();
    spec.t = order.back();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        bool any = false;
        for (std::size_t j = i + 1 + gap(rng); j < n; j += 1 + gap(rng)) {
            spec.edges.push_back({order[i], order[j], 0});
            any = true;
        }
        if (!any) {
            spec.edges.push_back({order[i], order[i + 1], 0});
        }
    }
    assign_costs(spec, rng, costs, false);
    return spec;
}

} // namespace spg
