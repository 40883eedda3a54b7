#include "pendant_dp.hpp"


#include "spg/error.hpp"

namespace spg {

namespace detail {

PendantDp::PendantDp(const Ring& ring) : r_(ring), paths_(ring) {
    const std::size_t k = r_.last();
    const std::size_t len = r_.size();
    t_.assign(k + 2, {});
    t_reply_.assign(k + 2, {});
    for (auto& row : rest_) {
        row.assign(k + 2, {});
    }

    for (std::size_t x = k; x >= 1; --x) {
        const VertexId ahead = r_.vertex[(x + 1) % len];
        for (std::size_t p = 0; p < 2; ++p) {
            Choice c;
            if (r_.forward_ok[x]) {
                offer(c, after_move(r_.cost[x], after_forward(x, 1 - p, true)), ahead, kForward);
                if (r_.swap[x]) {
                    offer(c, after_swap(r_.swap[x]->pair(), after_move(r_.cost[x], after_forward(x, p, true))),
                          r_.swap[x]->first, kSwap);
                }
            }
            rest_[p][x] = c;
        }
    }

    for (std::size_t i = k; i >= 1; --i) {
        const std::size_t q = i % 2;
        const VertexId ahead = r_.vertex[(i + 1) % len];
        Choice c;
        if (r_.forward_ok[i]) {
            const CostPair next = i < k ? t_[i + 1].value : home((i + 1) % 2);
            offer(c, after_move(r_.cost[i], next), ahead, kForward);
        }
        if (r_.swap[i]) {
            Choice reply;
            if (r_.forward_ok[i]) {
                offer(reply, after_move(r_.cost[i], after_forward(i, q, true)), ahead, kContinue);
            }
            offer(reply, paths_.backward(i, 0, CostPair{}), r_.vertex[i - 1], kTurnback);
            t_reply_[i] = reply;
            if (reply.feasible()) {
                offer(c, after_swap(r_.swap[i]->pair(), reply.value), r_.swap[i]->first, kSwap);
            }
        }
        t_[i] = c;
    }

    if (r_.forward_ok[0]) {
        offer(entry_, after_move(r_.cost[0], t_[1].value), r_.vertex[1], kForward);
    }
}

CostPair PendantDp::home(std::size_t parity) const { return parity == 1 ? CostPair{} : CostPair::top(); }

// State reached by moving from x to x+1 and arriving with the given parity.
CostPair PendantDp::after_forward(std::size_t x, std::size_t parity, bool swapped) const {
    if (x == r_.last()) {
        return home(parity);
    }
    return swapped ? rest_[parity][x + 1].value : t_[x + 1].value;
}

void PendantDp::trace(const SwapTable& swaps, std::vector<VertexId>& walk) const {
    const std::size_t k = r_.last();
    const std::size_t len = r_.size();
    walk.push_back(r_.vertex[1]);
    std::size_t x = 1;
    for (;;) {
        const Choice& c = t_[x];
        if (c.kind == kForward) {
            walk.push_back(r_.vertex[(x + 1) % len]);
            if (x == k) {
                return;
            }
            ++x;
            continue;
        }
        swaps.append_realization(r_.vertex[x], walk);
        if (t_reply_[x].kind == kTurnback) {
            for (std::size_t m = x; m-- > 0;) {
                walk.push_back(r_.vertex[m]);
            }
            return;
        }
        walk.push_back(r_.vertex[(x + 1) % len]);
        if (x == k) {
            return;
        }
        break;
    }
    std::size_t p = x % 2;
    ++x;
    for (;;) {
        const Choice& c = rest_[p][x];
        if (c.kind == kSwap) {
            swaps.append_realization(r_.vertex[x], walk);
        } else {
            p = 1 - p;
        }
        walk.push_back(r_.vertex[(x + 1) % len]);
        if (x == k) {
            return;
        }
        ++x;
    }
}

} // namespace detail

std::optional<SwapOption> contract_pendant_cycle(const Ring& ring, std::size_t block) {
    Choice best;
    if (ring.forward_ok.front()) {
        const Choice c = detail::PendantDp(ring).entry();
        offer(best, c.value, c.next, 0);
    }
    if (ring.backward_ok.back()) {
        const Ring back = ring.reversed();
        const Choice c = detail::PendantDp(back).entry();
        offer(best, c.value, c.next, 0);
    }
    if (!best.feasible()) {
        return std::nullopt;
    }
    return SwapOption{best.value.decider, best.value.follower, best.next, block};
}

SwapTable::SwapTable(const GameGraph& g, const CactusDecomposition& d)
    : g_(&g), d_(&d), slot_(g.vertex_count(), kNoSlot) {
    const auto edges = g.edges();
    for (auto it = d.branch_order.rbegin(); it != d.branch_order.rend(); ++it) {
        const std::size_t b = *it;
        const Block& block = d.tree.blocks[b];
        const VertexId root = d.branch_root[b];
        std::optional<SwapOption> candidate;
        if (block.is_bridge()) {
            const VertexId u = block.vertices[0] == root ? block.vertices[1] : block.vertices[0];
            if (!g.directed() && slot_[u] != kNoSlot) {
                const SwapOption& below = options_[slot_[u]];
                const Cost cost = edges[block.edges.front()].cost;
                candidate = SwapOption{CostValue(2 * cost) + below.sw_f, below.sw_d, u, b};
            }
        } else {
            candidate = contract_pendant_cycle(branch_ring(b), b);
        }
        if (!candidate) {
            continue;
        }
        if (slot_[root] == kNoSlot) {
            slot_[root] = static_cast<std::uint32_t>(options_.size());
            options_.push_back(*candidate);
        } else if (better_swap(*candidate, options_[slot_[root]])) {
            options_[slot_[root]] = *candidate;
        }
    }
}

Ring SwapTable::branch_ring(std::size_t block) const {
    Ring r = make_ring(*g_, d_->tree.blocks[block].edges, d_->branch_root[block]);
    for (std::size_t i = 1; i < r.size(); ++i) {
        r.swap[i] = at(r.vertex[i]);
    }
    return r;
}

void SwapTable::append_realization(VertexId root, std::vector<VertexId>& walk) const {
    const std::optional<SwapOption> option = at(root);
    if (!option) {
        throw Error(ErrorCode::NotCactus, "no swap option at vertex " + std::to_string(root));
    }
    const Block& block = d_->tree.blocks[option->block];
    if (block.is_bridge()) {
        walk.push_back(option->first);
        append_realization(option->first, walk);
        walk.push_back(root);
        return;
    }
    const Ring ring = branch_ring(option->block);
    const Ring back = ring.reversed();
    const detail::PendantDp there(ring);
    const detail::PendantDp other(back);
    const bool first = there.entry().feasible() &&
                       (!other.entry().feasible() || there.entry().rank() < other.entry().rank());
    (first ? there : other).trace(*this, walk);
}

std::vector<VertexId> SwapTable::realization(VertexId root) const {
    std::vector<VertexId> walk{root};
    append_realization(root, walk);
    return walk;
}

SwapTable contract_branches(const GameGraph& g, const CactusDecomposition& d) { return SwapTable(g, d); }

} // namespace spg
