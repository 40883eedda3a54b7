#include <algorithm>

#include "ring_paths.hpp"
#include "spg/error.hpp"

namespace spg {

void offer(Choice& best, const CostPair& value, VertexId next, std::uint8_t kind) {
    if (!value.finite()) {
        return;
    }
    if (!best.feasible() || rank_of(value, next) < best.rank()) {
        best = {value, next, kind};
    }
}

bool better_swap(const SwapOption& a, const SwapOption& b) {
    return OptionRank{a.sw_d, a.sw_f, a.first} < OptionRank{b.sw_d, b.sw_f, b.first};
}

Ring Ring::reversed() const {
    const std::size_t len = size();
    const std::size_t k = last();
    Ring r;
    r.vertex.resize(len);
    r.cost.resize(len);
    r.forward_ok.resize(len);
    r.backward_ok.resize(len);
    r.swap.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t orig = (len - i) % len;
        r.vertex[i] = vertex[orig];
        r.swap[i] = swap[orig];
        r.cost[i] = cost[k - i];
        r.forward_ok[i] = backward_ok[k - i];
        r.backward_ok[i] = forward_ok[k - i];
    }
    return r;
}

Ring make_ring(const GameGraph& g, std::span<const std::size_t> block_edges, VertexId root) {
    const auto edges = g.edges();
    std::vector<std::pair<VertexId, std::size_t>> incidence;
    incidence.reserve(2 * block_edges.size());
    for (std::size_t e : block_edges) {
        incidence.emplace_back(edges[e].u, e);
        incidence.emplace_back(edges[e].v, e);
    }
    std::sort(incidence.begin(), incidence.end());
    auto incident = [&](VertexId v) {
        auto it = std::lower_bound(incidence.begin(), incidence.end(), std::pair<VertexId, std::size_t>{v, 0});
        if (it == incidence.end() || it->first != v || it + 1 == incidence.end() || (it + 1)->first != v) {
            throw Error(ErrorCode::NotCactus, "block is not a simple cycle");
        }
        return std::pair{it->second, (it + 1)->second};
    };
    auto other_end = [&](std::size_t e, VertexId v) { return edges[e].u == v ? edges[e].v : edges[e].u; };

    Ring r;
    const std::size_t len = block_edges.size();
    r.vertex.reserve(len);
    r.cost.reserve(len);
    r.forward_ok.reserve(len);
    r.backward_ok.reserve(len);
    auto [e1, e2] = incident(root);
    std::size_t e = other_end(e1, root) < other_end(e2, root) ? e1 : e2;
    VertexId v = root;
    for (std::size_t i = 0; i < len; ++i) {
        r.vertex.push_back(v);
        r.cost.push_back(edges[e].cost);
        const bool along = edges[e].u == v;
        r.forward_ok.push_back(!g.directed() || along);
        r.backward_ok.push_back(!g.directed() || !along);
        v = other_end(e, v);
        auto [a, b] = incident(v);
        e = a == e ? b : a;
    }
    if (v != root) {
        throw Error(ErrorCode::NotCactus, "block is not a simple cycle");
    }
    r.swap.assign(len, std::nullopt);
    return r;
}

namespace detail {

RingPaths::RingPaths(const Ring& r) {
    const std::size_t len = r.size();
    for (auto& a : alternating_) {
        a.assign(len + 1, 0);
    }
    forward_blocked_.assign(len + 1, 0);
    backward_blocked_.assign(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t p = 0; p < 2; ++p) {
            alternating_[p][i + 1] = alternating_[p][i] + (i % 2 == p ? r.cost[i] : 0);
        }
        forward_blocked_[i + 1] = forward_blocked_[i] + (r.forward_ok[i] ? 0 : 1);
        backward_blocked_[i + 1] = backward_blocked_[i] + (r.backward_ok[i] ? 0 : 1);
    }
}

CostPair RingPaths::combine(std::size_t lo, std::size_t hi, std::size_t mover_parity, const CostPair& end) const {
    const CostValue mover = alternating_[mover_parity][hi] - alternating_[mover_parity][lo];
    const CostValue other = alternating_[1 - mover_parity][hi] - alternating_[1 - mover_parity][lo];
    if ((hi - lo) % 2 == 0) {
        return {mover + end.decider, other + end.follower};
    }
    return {mover + end.follower, other + end.decider};
}

CostPair RingPaths::forward(std::size_t from, std::size_t to, const CostPair& end) const {
    if (forward_blocked_[to] != forward_blocked_[from]) {
        return CostPair::top();
    }
    return combine(from, to, from % 2, end);
}

CostPair RingPaths::backward(std::size_t from, std::size_t to, const CostPair& end) const {
    if (from == to) {
        return end;
    }
    if (backward_blocked_[from] != backward_blocked_[to]) {
        return CostPair::top();
    }
    return combine(to, from, (from - 1) % 2, end);
}

} // namespace detail
} // namespace spg
