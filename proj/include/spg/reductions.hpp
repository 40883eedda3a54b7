#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spg/game.hpp"
#include "spg/graph.hpp"

namespace spg {

enum Color : std::uint8_t { kGreen = 0, kRed = 1 };

struct ReductionOutput {
    GraphSpec graph;
    Cost c_a = 0;
    Cost c_b = 0;
    std::vector<std::uint8_t> color; // per vertex; the source is green
};

// Vertex geography on a directed graph; A moves first from s and a player
// without an unvisited successor loses.
struct GeographyInstance {
    std::size_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    VertexId s = 0;
    std::vector<std::string> labels;
};

// {"n", "arcs": [[u, v]...], "s", "labels"?}
GeographyInstance parse_geography(std::string_view text);
std::string serialize_geography(const GeographyInstance& geo);

// Throws NotBipartite.
ReductionOutput geography_to_spg(const GeographyInstance& geo);
// Throws TooLarge above 12 vertices.
Player solve_geography(const GeographyInstance& geo);
// Bipartite instance with at least two arcs.
GeographyInstance gen_random_geography(std::size_t n, std::uint64_t seed, double arc_probability);

// Exists x1 forall x2 ... forall xn, n even; literals are +-variable (1-based).
struct QsatInstance {
    std::size_t n = 0;
    std::vector<std::array<int, 3>> clauses;
};

// "n m" followed by m lines of three signed variable indices.
QsatInstance parse_qsat(std::string_view text);

// Throws BadQuantifierPattern for odd or zero n.
ReductionOutput qsat_to_spg(const QsatInstance& q);
// Throws TooLarge above 16 variables.
bool eval_qbf(const QsatInstance& q);

} // namespace spg
