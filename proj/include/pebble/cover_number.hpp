#pragma once

#include "pebble/bigint.hpp"
#include "pebble/graph.hpp"

#include <vector>

namespace pebble {

struct StackingResult {
    BigInt lambda;
    Vertex argmax_vertex = 0;
    std::vector<BigInt> per_vertex_weights;
};

// Sum over u of 2^dist(u,v). Throws InputError if some vertex is unreachable from v.
BigInt stacking_weight(const Graph& g, const DistanceMatrix& d, Vertex v);

// Cover pebbling number of a connected graph: the largest stacking weight.
// Ties go to the smallest vertex. Throws InputError for empty or disconnected graphs.
StackingResult cover_pebbling_number(const Graph& g);

}  // namespace pebble
