#include <cstdlib>
#include <set>
#include <sstream>

#include "spg/error.hpp"
#include "spg/reductions.hpp"

namespace spg {

namespace {

constexpr std::size_t kQbfLimit = 16;

void validate(const QsatInstance& q) {
    if (q.n == 0 || q.n % 2 != 0) {
        throw Error(ErrorCode::BadQuantifierPattern,
                    "expected an even number of alternating variables, got " + std::to_string(q.n));
    }
    for (const auto& clause : q.clauses) {
        for (int lit : clause) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > q.n) {
                throw Error(ErrorCode::MalformedInput, "literal " + std::to_string(lit) + " out of range");
            }
        }
    }
}

class GadgetBuilder {
  public:
    VertexId add(std::string label, Color color) {
        spec_.labels.push_back(std::move(label));
        color_.push_back(color);
        return static_cast<VertexId>(spec_.labels.size() - 1);
    }

    void join(VertexId u, VertexId v, Cost cost) {
        if (seen_.insert(std::minmax(u, v)).second) {
            spec_.edges.push_back({u, v, cost});
        }
    }

    ReductionOutput finish(VertexId s, VertexId t) {
        spec_.n = spec_.labels.size();
        spec_.s = s;
        spec_.t = t;
        return {std::move(spec_), 0, 2, std::move(color_)};
    }

  private:
    GraphSpec spec_;
    std::vector<std::uint8_t> color_;
    std::set<std::pair<VertexId, VertexId>> seen_;
};

bool satisfied(const QsatInstance& q, std::uint32_t assignment) {
    for (const auto& clause : q.clauses) {
        bool any = false;
        for (int lit : clause) {
            const bool value = assignment >> (std::abs(lit) - 1) & 1U;
            any = any || (lit > 0) == value;
        }
        if (!any) {
            return false;
        }
    }
    return true;
}

bool eval_from(const QsatInstance& q, std::size_t var, std::uint32_t assignment) {
    if (var == q.n) {
        return satisfied(q, assignment);
    }
    const bool first = eval_from(q, var + 1, assignment);
    const bool second = eval_from(q, var + 1, assignment | (1U << var));
    return var % 2 == 0 ? (first || second) : (first && second);
}

} // namespace

QsatInstance parse_qsat(std::string_view text) {
    std::istringstream in{std::string(text)};
    QsatInstance q;
    std::size_t m = 0;
    if (!(in >> q.n >> m)) {
        throw Error(ErrorCode::MalformedInput, "expected header line 'n m'");
    }
    q.clauses.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (int& lit : q.clauses[j]) {
            if (!(in >> lit)) {
                throw Error(ErrorCode::MalformedInput, "clause " + std::to_string(j + 1) + ": expected three literals");
            }
        }
    }
    std::string extra;
    if (in >> extra) {
        throw Error(ErrorCode::MalformedInput, "trailing input after " + std::to_string(m) + " clauses");
    }
    validate(q);
    return q;
}

ReductionOutput qsat_to_spg(const QsatInstance& q) {
    validate(q);
    const std::size_t n = q.n;
    const std::size_t m = q.clauses.size();
    GadgetBuilder b;

    // ring[i][l] is v_{i,l}; i is 1-based
    std::vector<std::vector<VertexId>> ring(n + 1);
    std::vector<VertexId> link(n + 1, kNoVertex);
    for (std::size_t i = 1; i <= n; ++i) {
        const bool odd = i % 2 == 1;
        if (!odd) {
            link[i] = b.add("u" + std::to_string(i), kGreen);
        }
        const std::size_t len = odd ? 6 : 8;
        for (std::size_t l = 0; l < len; ++l) {
            const bool even_pos = l % 2 == 0;
            ring[i].push_back(
                b.add("v" + std::to_string(i) + "_" + std::to_string(l), even_pos == odd ? kGreen : kRed));
        }
    }
    std::vector<VertexId> clause(m);
    for (std::size_t j = 0; j < m; ++j) {
        clause[j] = b.add("c" + std::to_string(j + 1), kGreen);
    }
    const VertexId d = b.add("d", kGreen);
    const VertexId p = b.add("p", kGreen);
    const VertexId r = b.add("r", kGreen);
    const VertexId w = b.add("w", kRed);
    const VertexId qv = b.add("q", kRed);
    const VertexId t = b.add("t", kRed);

    for (std::size_t i = 1; i <= n; ++i) {
        const auto& v = ring[i];
        const bool odd = i % 2 == 1;
        for (std::size_t l = 0; l < v.size(); ++l) {
            b.join(v[l], v[(l + 1) % v.size()], 0);
        }
        const VertexId positive = odd ? v[1] : v[2];
        const VertexId negative = odd ? v[5] : v[6];
        b.join(positive, r, 2);
        b.join(negative, r, 2);
        if (!odd) {
            b.join(ring[i - 1][3], link[i], 0);
            b.join(link[i], v[0], 0);
            b.join(v[4], i == n ? p : ring[i + 1][0], i == n ? 1 : 0);
        }
        for (std::size_t j = 0; j < m; ++j) {
            for (int lit : q.clauses[j]) {
                if (static_cast<std::size_t>(std::abs(lit)) == i) {
                    b.join(lit > 0 ? positive : negative, clause[j], 3);
                }
            }
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        b.join(qv, clause[j], 0);
        b.join(w, clause[j], 4);
    }
    b.join(p, qv, 0);
    b.join(r, t, 0);
    b.join(w, d, 0);
    b.join(d, t, 0);
    return b.finish(ring[1][0], t);
}

bool eval_qbf(const QsatInstance& q) {
    validate(q);
    if (q.n > kQbfLimit) {
        throw Error(ErrorCode::TooLarge, "QBF oracle supports at most " + std::to_string(kQbfLimit) + " variables");
    }
    return eval_from(q, 0, 0);
}

} // namespace spg
