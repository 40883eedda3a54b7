#include "spg/dag.hpp"

#include "spg/error.hpp"

namespace spg {

DagTables dag_tables(const GameGraph& g) {
    if (!g.directed()) {
        throw Error(ErrorCode::NotADag, "graph is undirected");
    }
    std::vector<VertexId> order;
    try {
        order = topological_order(g);
    } catch (const Error&) {
        throw Error(ErrorCode::NotADag, "graph contains a directed cycle");
    }
    const std::size_t n = g.vertex_count();
    DagTables tables{std::vector<CostValue>(n, CostValue::top()), std::vector<CostValue>(n, CostValue::top()),
                     std::vector<VertexId>(n, kNoVertex), 0};
    const VertexId t = g.sink();
    tables.p_d[t] = 0;
    tables.p_f[t] = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId v = *it;
        if (v == t) {
            continue;
        }
        OptionRank best{CostValue::top(), CostValue::top(), kNoVertex};
        for (const Arc& a : g.out(v)) {
            ++tables.arcs_evaluated;
            if (!tables.p_d[a.to].finite()) {
                continue;
            }
            const OptionRank r{CostValue(a.cost) + tables.p_f[a.to], tables.p_d[a.to], a.to};
            if (r < best) {
                best = r;
            }
        }
        if (best.next != kNoVertex) {
            tables.p_d[v] = best.own;
            tables.p_f[v] = best.other;
            tables.choice[v] = best.next;
        }
    }
    return tables;
}

Solution solve_dag(const GameGraph& g) {
    const DagTables tables = dag_tables(g);
    if (!tables.p_d[g.source()].finite()) {
        throw Error(ErrorCode::NoPathToSink, "sink is not reachable from source");
    }
    std::vector<VertexId> walk{g.source()};
    while (walk.back() != g.sink()) {
        walk.push_back(tables.choice[walk.back()]);
    }
    return make_solution(g, std::move(walk), "dag", g.vertex_count());
}

} // namespace spg
