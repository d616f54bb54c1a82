#include "pebble/cover_number.hpp"

#include <string>

namespace pebble {

BigInt stacking_weight(const Graph& g, const DistanceMatrix& d, Vertex v) {
    if (v >= g.vertex_count()) throw InputError("vertex out of range");
    BigInt weight = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (!d.reachable(u, v))
            throw InputError("graph is disconnected: no path between " + std::to_string(u) + " and " +
                             std::to_string(v));
        BigInt term = 1;
        term <<= d(u, v);
        weight += term;
    }
    return weight;
}

StackingResult cover_pebbling_number(const Graph& g) {
    if (g.vertex_count() == 0) throw InputError("cover pebbling number needs at least one vertex");
    if (auto pair = g.unreachable_pair())
        throw InputError("graph is disconnected: no path between " + std::to_string(pair->first) + " and " +
                         std::to_string(pair->second));
    StackingResult result;
    result.per_vertex_weights.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        result.per_vertex_weights.push_back(stacking_weight(g, g.distances(), v));
        if (v == 0 || result.per_vertex_weights.back() > result.lambda) {
            result.lambda = result.per_vertex_weights.back();
            result.argmax_vertex = v;
        }
    }
    return result;
}

}  // namespace pebble
