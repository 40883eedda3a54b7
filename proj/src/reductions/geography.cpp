#include <algorithm>
#include <queue>
#include <random>
#include <unordered_map>

#include "json.hpp"
#include "spg/error.hpp"
#include "spg/reductions.hpp"

namespace spg {

namespace {

using nlohmann::json;

constexpr std::size_t kGeographyLimit = 12;

std::vector<std::uint8_t> color_from_source(const GeographyInstance& geo) {
    std::vector<std::vector<VertexId>> adj(geo.n);
    for (auto [u, v] : geo.arcs) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    constexpr std::uint8_t kUnset = 2;
    std::vector<std::uint8_t> color(geo.n, kUnset);
    std::queue<VertexId> queue;
    for (std::size_t i = 0; i < geo.n; ++i) {
        const VertexId root = i == 0 ? geo.s : static_cast<VertexId>(i);
        if (color[root] != kUnset) {
            continue;
        }
        color[root] = kGreen;
        queue.push(root);
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            for (VertexId w : adj[u]) {
                if (color[w] == kUnset) {
                    color[w] = color[u] ^ 1;
                    queue.push(w);
                } else if (color[w] == color[u]) {
                    throw Error(ErrorCode::NotBipartite, "geography graph has an odd cycle");
                }
            }
        }
    }
    return color;
}

std::string fresh_label(const std::vector<std::string>& taken, std::string name) {
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) {
        name += "'";
    }
    return name;
}

bool mover_wins(const std::vector<std::vector<VertexId>>& out, VertexId v, std::uint32_t visited,
                std::unordered_map<std::uint64_t, bool>& memo) {
    const std::uint64_t key = (std::uint64_t{visited} << 5) | v;
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    bool wins = false;
    for (VertexId w : out[v]) {
        if (!(visited >> w & 1U) && !mover_wins(out, w, visited | (1U << w), memo)) {
            wins = true;
            break;
        }
    }
    memo.emplace(key, wins);
    return wins;
}

} // namespace

GeographyInstance parse_geography(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::SchemaError, "expected an object");
    }
    GeographyInstance geo;
    try {
        geo.n = doc.at("n").get<std::size_t>();
        geo.s = doc.at("s").get<VertexId>();
        for (const auto& arc : doc.at("arcs")) {
            if (!arc.is_array() || arc.size() != 2) {
                throw Error(ErrorCode::SchemaError, "field 'arcs': expected [u, v] pairs");
            }
            geo.arcs.emplace_back(arc[0].get<VertexId>(), arc[1].get<VertexId>());
        }
        if (doc.contains("labels")) {
            geo.labels = doc["labels"].get<std::vector<std::string>>();
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
    if (geo.s >= geo.n) {
        throw Error(ErrorCode::SchemaError, "field 's': out of range");
    }
    for (auto [u, v] : geo.arcs) {
        if (u >= geo.n || v >= geo.n) {
            throw Error(ErrorCode::SchemaError, "field 'arcs': vertex out of range");
        }
        if (u == v) {
            throw Error(ErrorCode::SelfLoop, "arc " + std::to_string(u) + "->" + std::to_string(v));
        }
    }
    if (!geo.labels.empty() && geo.labels.size() != geo.n) {
        throw Error(ErrorCode::SchemaError, "field 'labels': expected n entries");
    }
    return geo;
}

std::string serialize_geography(const GeographyInstance& geo) {
    nlohmann::ordered_json doc;
    doc["n"] = geo.n;
    if (!geo.labels.empty()) {
        doc["labels"] = geo.labels;
    }
    doc["arcs"] = json::array();
    for (auto [u, v] : geo.arcs) {
        doc["arcs"].push_back({u, v});
    }
    doc["s"] = geo.s;
    return doc.dump() + "\n";
}

ReductionOutput geography_to_spg(const GeographyInstance& geo) {
    ReductionOutput out;
    out.color = color_from_source(geo);
    const Cost big = static_cast<Cost>(geo.arcs.size()) + 1;
    const auto t = static_cast<VertexId>(geo.n);
    const auto z = static_cast<VertexId>(geo.n + 1);

    GraphSpec& h = out.graph;
    h.directed = true;
    h.n = geo.n + 2;
    h.s = geo.s;
    h.t = t;
    for (auto [u, v] : geo.arcs) {
        h.edges.push_back({u, v, 1});
    }
    for (VertexId v = 0; v < geo.n; ++v) {
        h.edges.push_back({v, out.color[v] == kGreen ? t : z, big});
    }
    h.edges.push_back({z, t, 1});
    out.color.push_back(kRed);
    out.color.push_back(kGreen);

    h.labels = geo.labels;
    if (h.labels.empty()) {
        for (VertexId v = 0; v < geo.n; ++v) {
            h.labels.push_back(v == geo.s ? "s" : "g" + std::to_string(v));
        }
    }
    h.labels.push_back(fresh_label(h.labels, "t"));
    h.labels.push_back(fresh_label(h.labels, "z"));

    out.c_a = 2;
    out.c_b = big;
    return out;
}

Player solve_geography(const GeographyInstance& geo) {
    if (geo.n > kGeographyLimit) {
        throw Error(ErrorCode::TooLarge, "geography oracle supports at most " + std::to_string(kGeographyLimit) +
                                             " vertices, got " + std::to_string(geo.n));
    }
    std::vector<std::vector<VertexId>> out(geo.n);
    for (auto [u, v] : geo.arcs) {
        out[u].push_back(v);
    }
    std::unordered_map<std::uint64_t, bool> memo;
    return mover_wins(out, geo.s, 1U << geo.s, memo) ? Player::A : Player::B;
}

GeographyInstance gen_random_geography(std::size_t n, std::uint64_t seed, double arc_probability) {
    if (n < 2) {
        throw Error(ErrorCode::MalformedInput, "generator needs n >= 2");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(arc_probability);
    GeographyInstance geo;
    geo.n = n;
    std::vector<std::uint8_t> side(n);
    for (;;) {
        geo.arcs.clear();
        for (auto& c : side) {
            c = static_cast<std::uint8_t>(rng() % 2);
        }
        geo.s = static_cast<VertexId>(rng() % n);
        side[geo.s] = kGreen;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                if (side[u] != side[v] && coin(rng)) {
                    geo.arcs.emplace_back(u, v);
                }
            }
        }
        if (geo.arcs.size() >= 2) {
            return geo;
        }
    }
}

} // namespace spg
