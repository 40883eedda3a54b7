#pragma once

#include <cstdint>

#include "spg/graph.hpp"

namespace spg {

struct CostRange {
    Cost lo = 1;
    Cost hi = 20;
};

// Random tree of pendant edges and cycles (length 3..7) grown from vertex 0.
// distinct assigns lo, lo+1, ... in random order instead of sampling.
GraphSpec gen_random_cactus(std::size_t n, std::uint64_t seed, CostRange costs = {}, bool distinct = false);

// Same shape with every edge oriented; an underlying s-t path is oriented
// towards t so the sink stays reachable.
GraphSpec gen_random_directed_cactus(std::size_t n, std::uint64_t seed, CostRange costs = {},
                                     bool distinct = false);

// Forward arcs of a random vertex order; s is first, t last.
GraphSpec gen_random_dag(std::size_t n, std::uint64_t seed, double arc_probability, CostRange costs = {});

} // namespace spg
