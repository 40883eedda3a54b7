#include <array>
#include <utility>

#include "pendant_dp.hpp"
#include "ring_paths.hpp"
#include "spg/error.hpp"

namespace spg {

namespace detail {
namespace {

enum class Leave { Open, Closed, Terminal };

// One direction of a strip cycle: the walk enters at position 0 with the move
// 0 -> 1 and finally leaves the cycle at position l.  Phase A is the first
// pass 0 -> l before any swap, phase B the same pass after one; the far game
// covers positions l+1..k entered from l, and phase C the second pass 0 -> k
// -> l after turning back at some j < l.
class StripRingDp {
  public:
    StripRingDp(Ring ring, std::size_t exit_pos, const ExitCosts& exit, bool turnarounds)
        : r_(std::move(ring)), paths_(r_), l_(exit_pos), k_(r_.last()), x_(exit) {
        solve_far_side();
        solve_arrivals();
        c0_.assign(l_, CostPair::top());
        if (turnarounds) {
            for (std::size_t j = 1; j < l_; ++j) {
                c0_[j] = phase_c(j).entry;
            }
        }
        solve_near_side();
    }

    [[nodiscard]] Choice entry(bool open) const {
        Choice c;
        if (r_.forward_ok[0]) {
            const CostPair next = l_ > 1 ? (open ? pa_[1] : pb_[1]).value : (open ? arr_a_ : arr_b_).value;
            offer(c, after_move(r_.cost[0], next), r_.vertex[1], kForward);
        }
        return c;
    }

    [[nodiscard]] std::size_t table_size() const { return pa_.size() + pb_.size() + 5 * fg_free_.size() + c0_.size(); }

    Leave trace(bool open, const SwapTable& swaps, std::vector<VertexId>& walk) const {
        walk.push_back(r_.vertex[1]);
        bool phase_a = open;
        std::size_t i = 1;
        while (i < l_) {
            if (phase_a) {
                const Choice& c = pa_[i];
                if (c.kind == kForward) {
                    walk.push_back(r_.vertex[++i]);
                    continue;
                }
                swaps.append_realization(r_.vertex[i], walk);
                if (pa_reply_[i].kind == kTurnback) {
                    for (std::size_t m = i; m-- > 0;) {
                        walk.push_back(r_.vertex[m]);
                    }
                    return trace_phase_c(i, swaps, walk);
                }
                walk.push_back(r_.vertex[++i]);
                phase_a = false;
                continue;
            }
            if (pb_[i].kind == kSwap) {
                swaps.append_realization(r_.vertex[i], walk);
            }
            walk.push_back(r_.vertex[++i]);
        }
        return trace_arrival(phase_a ? arr_a_ : arr_b_, phase_a, swaps, walk);
    }

  private:
    struct PhaseC {
        std::vector<Choice> descend; // moves l-1 down towards j+1 before a swap
        std::vector<Choice> pass;    // second pass k down to l+1
        Choice arrival;
        CostPair entry;
    };

    [[nodiscard]] CostPair closed_exit() const { return x_.sink ? CostPair{} : x_.edv.value; }

    void add_exit_options(Choice& c) const {
        offer(c, x_.ed2v.value, x_.ed2v.next, kOpenExit);
        offer(c, x_.swap.value, x_.swap.next, kSwapExit);
    }

    // Back at 0 with the decision handed over: the walk repeats the near pass.
    [[nodiscard]] CostPair reach_zero(std::size_t parity) const {
        return parity == 1 ? paths_.forward(0, l_, closed_exit()) : CostPair::top();
    }

    // Value after moving x -> x+1 into the given far-game table.
    [[nodiscard]] CostPair far_step(std::size_t x, std::size_t parity, const std::array<std::vector<Choice>, 2>& table,
                                    bool full) const {
        if (!r_.forward_ok[x]) {
            return CostPair::top();
        }
        if (x == k_) {
            return after_move(r_.cost[x], full ? reach_zero(parity) : CostPair::top());
        }
        return after_move(r_.cost[x], table[parity][x + 1].value);
    }

    void solve_far_side() {
        fg_free_.assign(k_ + 2, {});
        for (auto* t : {&fg_open_, &fg_open_reply_, &fg_cont_}) {
            for (auto& row : *t) {
                row.assign(k_ + 2, {});
            }
        }
        if (x_.sink) {
            return;
        }
        const CostPair closed = closed_exit();
        for (std::size_t x = k_; x > l_; --x) {
            const VertexId ahead = r_.vertex[(x + 1) % r_.size()];
            const auto& sw = r_.swap[x];
            CostPair back = CostPair::top();
            if (sw) {
                back = paths_.backward(x, l_, closed);
            }

            Choice free;
            if (r_.forward_ok[x] && x < k_) {
                offer(free, after_move(r_.cost[x], fg_free_[x + 1].value), ahead, kForward);
            }
            if (sw) {
                offer(free, after_swap(sw->pair(), back), sw->first, kSwap);
            }
            fg_free_[x] = free;

            for (std::size_t p = 0; p < 2; ++p) {
                Choice cont;
                offer(cont, far_step(x, 1 - p, fg_cont_, true), ahead, kForward);
                if (sw) {
                    offer(cont, after_swap(sw->pair(), far_step(x, p, fg_cont_, true)), sw->first, kSwap);
                }
                fg_cont_[p][x] = cont;
            }
            for (std::size_t p = 0; p < 2; ++p) {
                Choice open;
                offer(open, far_step(x, 1 - p, fg_open_, true), ahead, kForward);
                if (sw) {
                    Choice reply;
                    offer(reply, back, r_.vertex[x - 1], kReturn);
                    offer(reply, far_step(x, p, fg_cont_, true), ahead, kContinue);
                    fg_open_reply_[p][x] = reply;
                    if (reply.feasible()) {
                        offer(open, after_swap(sw->pair(), reply.value), sw->first, kSwap);
                    }
                }
                fg_open_[p][x] = open;
            }
        }
    }

    void solve_arrivals() {
        if (x_.sink) {
            arr_a_ = arr_b_ = terminal_choice();
            return;
        }
        const VertexId ahead = r_.vertex[(l_ + 1) % r_.size()];
        add_exit_options(arr_a_);
        add_exit_options(arr_b_);
        if (r_.forward_ok[l_]) {
            const std::size_t p = (l_ + 1) % 2;
            const CostPair full = l_ < k_ ? fg_open_[p][l_ + 1].value : reach_zero(p);
            offer(arr_a_, after_move(r_.cost[l_], full), ahead, kFarEntry);
            if (l_ < k_) {
                offer(arr_b_, after_move(r_.cost[l_], fg_free_[l_ + 1].value), ahead, kFarEntry);
            }
        }
    }

    void solve_near_side() {
        pa_.assign(l_ + 1, {});
        pa_reply_.assign(l_ + 1, {});
        pb_.assign(l_ + 1, {});
        for (std::size_t i = l_ - 1; i >= 1; --i) {
            const VertexId ahead = r_.vertex[i + 1];
            const CostPair next_b = i + 1 < l_ ? pb_[i + 1].value : arr_b_.value;
            const CostPair next_a = i + 1 < l_ ? pa_[i + 1].value : arr_a_.value;
            const auto& sw = r_.swap[i];

            Choice b;
            if (r_.forward_ok[i]) {
                offer(b, after_move(r_.cost[i], next_b), ahead, kForward);
                if (sw) {
                    offer(b, after_swap(sw->pair(), after_move(r_.cost[i], next_b)), sw->first, kSwap);
                }
            }
            pb_[i] = b;

            Choice a;
            if (r_.forward_ok[i]) {
                offer(a, after_move(r_.cost[i], next_a), ahead, kForward);
            }
            if (sw) {
                Choice reply;
                if (r_.forward_ok[i]) {
                    offer(reply, after_move(r_.cost[i], next_b), ahead, kContinue);
                }
                offer(reply, paths_.backward(i, 0, c0_[i]), r_.vertex[i - 1], kTurnback);
                pa_reply_[i] = reply;
                if (reply.feasible()) {
                    offer(a, after_swap(sw->pair(), reply.value), sw->first, kSwap);
                }
            }
            pa_[i] = a;
        }
    }

    // Second visit of 0 after turning back at j: forced move 0 -> k, then
    // towards l; positions j+1..l-1 remain unvisited.
    [[nodiscard]] PhaseC phase_c(std::size_t j) const {
        PhaseC pc;
        const CostPair closed = closed_exit();
        pc.descend.assign(l_ + 1, {});
        for (std::size_t y = j + 1; y < l_; ++y) {
            Choice c;
            if (y - 1 > j && r_.backward_ok[y - 1]) {
                offer(c, after_move(r_.cost[y - 1], pc.descend[y - 1].value), r_.vertex[y - 1], kForward);
            }
            if (const auto& sw = r_.swap[y]) {
                offer(c, after_swap(sw->pair(), paths_.forward(y, l_, closed)), sw->first, kSwap);
            }
            pc.descend[y] = c;
        }
        if (x_.sink) {
            pc.arrival = terminal_choice();
        } else {
            add_exit_options(pc.arrival);
        }
        if (!x_.sink && l_ - 1 > j && r_.backward_ok[l_ - 1]) {
            offer(pc.arrival, after_move(r_.cost[l_ - 1], pc.descend[l_ - 1].value), r_.vertex[l_ - 1], kBackSwap);
        }
        pc.pass.assign(k_ + 1, {});
        for (std::size_t x = l_ + 1; x <= k_; ++x) {
            if (!r_.backward_ok[x - 1]) {
                continue;
            }
            const CostPair next = after_move(r_.cost[x - 1], x - 1 == l_ ? pc.arrival.value : pc.pass[x - 1].value);
            Choice c;
            offer(c, next, r_.vertex[x - 1], kForward);
            if (const auto& sw = r_.swap[x]) {
                offer(c, after_swap(sw->pair(), next), sw->first, kSwap);
            }
            pc.pass[x] = c;
        }
        pc.entry = CostPair::top();
        if (r_.backward_ok[k_]) {
            pc.entry = after_move(r_.cost[k_], k_ > l_ ? pc.pass[k_].value : pc.arrival.value);
        }
        return pc;
    }

    Leave trace_exit(const Choice& c, const SwapTable& swaps, std::vector<VertexId>& walk) const {
        switch (c.kind) {
        case kTerminal: return Leave::Terminal;
        case kOpenExit: return Leave::Open;
        case kSwapExit: swaps.append_realization(r_.vertex[l_], walk); return Leave::Closed;
        default: throw Error(ErrorCode::NotCactus, "inconsistent strip cycle choice");
        }
    }

    Leave trace_arrival(const Choice& arrival, bool full, const SwapTable& swaps, std::vector<VertexId>& walk) const {
        if (arrival.kind != kFarEntry) {
            return trace_exit(arrival, swaps, walk);
        }
        const std::size_t len = r_.size();
        walk.push_back(r_.vertex[(l_ + 1) % len]);
        if (full && l_ == k_) {
            return trace_near_pass(walk);
        }
        std::size_t x = l_ + 1;
        if (!full) {
            while (fg_free_[x].kind == kForward) {
                walk.push_back(r_.vertex[++x]);
            }
            swaps.append_realization(r_.vertex[x], walk);
            return trace_return(x, walk);
        }
        std::size_t p = x % 2;
        bool swapped = false;
        for (;;) {
            const Choice& c = (swapped ? fg_cont_ : fg_open_)[p][x];
            if (c.kind == kSwap) {
                swaps.append_realization(r_.vertex[x], walk);
                if (!swapped) {
                    if (fg_open_reply_[p][x].kind == kReturn) {
                        return trace_return(x, walk);
                    }
                    swapped = true;
                }
            } else {
                p = 1 - p;
            }
            walk.push_back(r_.vertex[(x + 1) % len]);
            if (x == k_) {
                return trace_near_pass(walk);
            }
            ++x;
        }
    }

    Leave trace_return(std::size_t x, std::vector<VertexId>& walk) const {
        for (std::size_t m = x; m-- > l_;) {
            walk.push_back(r_.vertex[m]);
        }
        return Leave::Closed;
    }

    Leave trace_near_pass(std::vector<VertexId>& walk) const {
        for (std::size_t m = 1; m <= l_; ++m) {
            walk.push_back(r_.vertex[m]);
        }
        return Leave::Closed;
    }

    Leave trace_phase_c(std::size_t j, const SwapTable& swaps, std::vector<VertexId>& walk) const {
        const PhaseC pc = phase_c(j);
        walk.push_back(r_.vertex[k_]);
        for (std::size_t x = k_; x > l_; --x) {
            if (pc.pass[x].kind == kSwap) {
                swaps.append_realization(r_.vertex[x], walk);
            }
            walk.push_back(r_.vertex[x - 1]);
        }
        if (pc.arrival.kind != kBackSwap) {
            return trace_exit(pc.arrival, swaps, walk);
        }
        std::size_t y = l_ - 1;
        walk.push_back(r_.vertex[y]);
        while (pc.descend[y].kind == kForward) {
            walk.push_back(r_.vertex[--y]);
        }
        swaps.append_realization(r_.vertex[y], walk);
        for (std::size_t m = y + 1; m <= l_; ++m) {
            walk.push_back(r_.vertex[m]);
        }
        return Leave::Closed;
    }

    Ring r_;
    RingPaths paths_;
    std::size_t l_;
    std::size_t k_;
    ExitCosts x_;
    std::vector<Choice> pa_;
    std::vector<Choice> pa_reply_;
    std::vector<Choice> pb_;
    Choice arr_a_;
    Choice arr_b_;
    std::vector<Choice> fg_free_;
    std::array<std::vector<Choice>, 2> fg_open_;
    std::array<std::vector<Choice>, 2> fg_open_reply_;
    std::array<std::vector<Choice>, 2> fg_cont_;
    std::vector<CostPair> c0_;
};

struct CycleSolution {
    StripRingDp there;
    StripRingDp back;
};

ExitCosts finish_exit_costs(Choice ed2v, Choice edv, const std::optional<SwapOption>& swap_here) {
    ExitCosts x;
    x.ed2v = ed2v;
    x.edv = edv;
    if (swap_here && edv.feasible()) {
        offer(x.swap, after_swap(swap_here->pair(), edv.value), swap_here->first, kSwap);
    }
    offer(x.arrival, ed2v.value, ed2v.next, kOpenExit);
    offer(x.arrival, x.swap.value, x.swap.next, kSwapExit);
    return x;
}

struct StripSweep {
    std::vector<ExitCosts> exits;
    std::vector<std::optional<CycleSolution>> cycles;
    std::size_t entries = 0;
};

StripSweep sweep(const GameGraph& g, const CactusDecomposition& d, const SwapTable& swaps) {
    const auto& comps = d.strip.components;
    const std::size_t r = comps.size();
    StripSweep out;
    out.exits.resize(r + 1);
    out.cycles.resize(r);
    out.exits[r] = sink_exit_costs();
    const bool turnarounds = !g.directed();
    for (std::size_t i = r; i-- > 0;) {
        const StripComponent& comp = comps[i];
        const auto& swap_here = swaps.at(comp.entry);
        if (!comp.cycle) {
            const bool usable = g.arc_cost(comp.entry, comp.exit).has_value();
            out.exits[i] = propagate_bridge(comp.bridge_cost, comp.exit, out.exits[i + 1], swap_here, usable);
            ++out.entries;
            continue;
        }
        Ring ring = make_ring(g, d.tree.blocks[comp.block].edges, comp.entry);
        for (std::size_t p = 1; p < ring.size(); ++p) {
            if (p != comp.exit_pos) {
                ring.swap[p] = swaps.at(ring.vertex[p]);
            }
        }
        Ring back = ring.reversed();
        const std::size_t back_exit = ring.size() - comp.exit_pos;
        CycleSolution sol{StripRingDp(std::move(ring), comp.exit_pos, out.exits[i + 1], turnarounds),
                          StripRingDp(std::move(back), back_exit, out.exits[i + 1], turnarounds)};
        Choice ed2v;
        Choice edv;
        for (std::uint8_t dir = 0; dir < 2; ++dir) {
            const StripRingDp& dp = dir == 0 ? sol.there : sol.back;
            const Choice open = dp.entry(true);
            const Choice closed = dp.entry(false);
            offer(ed2v, open.value, open.next, dir);
            offer(edv, closed.value, closed.next, dir);
        }
        out.entries += sol.there.table_size() + sol.back.table_size();
        out.exits[i] = finish_exit_costs(ed2v, edv, swap_here);
        out.cycles[i].emplace(std::move(sol));
    }
    return out;
}

Solution solve_on_strip(const GameGraph& g, const CactusDecomposition& d, const char* algorithm) {
    const SwapTable swaps(g, d);
    const StripSweep result = sweep(g, d, swaps);
    const auto& comps = d.strip.components;
    if (comps.empty()) {
        return make_solution(g, {g.source()}, algorithm, 1);
    }
    if (!result.exits[0].arrival.feasible()) {
        throw Error(ErrorCode::NoPathToSink, "no legal play reaches the sink");
    }

    std::vector<VertexId> walk{g.source()};
    Leave how = result.exits[0].arrival.kind == kSwapExit ? Leave::Closed : Leave::Open;
    if (how == Leave::Closed) {
        swaps.append_realization(g.source(), walk);
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const ExitCosts& here = result.exits[i];
        const Choice& move = how == Leave::Open ? here.ed2v : here.edv;
        if (!comps[i].cycle) {
            walk.push_back(comps[i].exit);
            const ExitCosts& there = result.exits[i + 1];
            if (there.sink) {
                break;
            }
            how = there.arrival.kind == kSwapExit ? Leave::Closed : Leave::Open;
            if (how == Leave::Closed) {
                swaps.append_realization(comps[i].exit, walk);
            }
            continue;
        }
        const CycleSolution& cyc = *result.cycles[i];
        how = (move.kind == 0 ? cyc.there : cyc.back).trace(how == Leave::Open, swaps, walk);
        if (how == Leave::Terminal) {
            break;
        }
    }
    return make_solution(g, std::move(walk), algorithm, result.entries + swaps.decomposition().branch_order.size());
}

} // namespace
} // namespace detail

ExitCosts sink_exit_costs() {
    ExitCosts x;
    x.sink = true;
    x.edv = x.ed2v = x.arrival = detail::terminal_choice();
    return x;
}

ExitCosts propagate_bridge(Cost cost, VertexId w, const ExitCosts& at_w, const std::optional<SwapOption>& swap_at_u,
                           bool usable) {
    Choice move;
    if (usable) {
        offer(move, after_move(cost, at_w.arrival.value), w, detail::kForward);
    }
    return detail::finish_exit_costs(move, move, swap_at_u);
}

ExitCosts solve_strip_cycle(const Ring& ring, std::size_t exit_pos, const ExitCosts& at_exit,
                            const std::optional<SwapOption>& swap_at_entry, bool directed) {
    const detail::StripRingDp there(ring, exit_pos, at_exit, !directed);
    const detail::StripRingDp back(ring.reversed(), ring.size() - exit_pos, at_exit, !directed);
    Choice ed2v;
    Choice edv;
    for (std::uint8_t dir = 0; dir < 2; ++dir) {
        const auto& dp = dir == 0 ? there : back;
        offer(ed2v, dp.entry(true).value, dp.entry(true).next, dir);
        offer(edv, dp.entry(false).value, dp.entry(false).next, dir);
    }
    return detail::finish_exit_costs(ed2v, edv, swap_at_entry);
}

std::vector<ExitCosts> strip_exit_costs(const GameGraph& g, const CactusDecomposition& d, const SwapTable& swaps) {
    return detail::sweep(g, d, swaps).exits;
}

Solution solve_cactus(const GameGraph& g) {
    if (g.directed()) {
        throw Error(ErrorCode::NotCactus, "graph is directed");
    }
    return detail::solve_on_strip(g, decompose(g), "cactus");
}

Solution solve_directed_cactus(const GameGraph& g) {
    if (!g.directed()) {
        throw Error(ErrorCode::NotDirectedCactus, "graph is undirected");
    }
    CactusDecomposition d;
    try {
        d = decompose(g);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotCactus) {
            throw;
        }
        throw Error(ErrorCode::NotDirectedCactus, "underlying graph is not a cactus");
    }
    return detail::solve_on_strip(g, d, "directed-cactus");
}

Solution solve_tree(const GameGraph& g) {
    if (g.directed()) {
        throw Error(ErrorCode::NotCactus, "graph is directed");
    }
    const CactusDecomposition d = decompose(g);
    for (const Block& b : d.tree.blocks) {
        if (!b.is_bridge()) {
            throw Error(ErrorCode::NotCactus, "graph has a cycle");
        }
    }
    return make_solution(g, d.strip.cut, "tree", d.strip.cut.size());
}

} // namespace spg
