#include "pebble/graph.hpp"

#include "pebble/rng.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace pebble {

std::uint32_t DistanceMatrix::eccentricity(Vertex v) const {
    std::uint32_t best = 0;
    for (auto d : row(v))
        if (d != kUnreachable) best = std::max(best, d);
    return best;
}

Graph::Graph(std::size_t n, std::span<const Edge> edge_list) : n_(n), adjacency_(n) {
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
    distances_ = std::make_shared<const DistanceMatrix>(distance_matrix(*this));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<Graph::Edge> Graph::unreachable_pair() const {
    for (Vertex v = 1; v < n_; ++v)
        if (!distances_->reachable(0, v)) return Edge{0, v};
    return std::nullopt;
}

bool Graph::connected() const { return !unreachable_pair(); }

bool Graph::is_complete() const {
    for (Vertex v = 0; v < n_; ++v)
        if (adjacency_[v].size() + 1 != n_) return false;
    return true;
}

Graph build_graph(std::size_t n, std::span<const Graph::Edge> edge_list) { return Graph(n, edge_list); }

DistanceMatrix distance_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> dist(n * n, DistanceMatrix::kUnreachable);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        auto* row = dist.data() + std::size_t(s) * n;
        std::size_t head = 0, tail = 0;
        row[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u)) {
                if (row[w] == DistanceMatrix::kUnreachable) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(dist));
}

Configuration::Configuration(std::vector<Count> pebbles) : pebbles_(std::move(pebbles)) {
    for (Count c : pebbles_) {
        if (__builtin_add_overflow(total_, c, &total_))
            throw InputError("pebble total exceeds 64-bit range");
    }
}

void check_dimensions(const Graph& g, const Configuration& c) {
    if (g.vertex_count() != c.size())
        throw InputError("configuration has " + std::to_string(c.size()) + " entries but graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
}

Graph complete_graph(std::size_t n) {
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Graph::Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<Graph::Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, Vertex((v + 1) % n));
    return Graph(n, edges);
}

Graph cube_graph(std::size_t d) {
    if (d > 24) throw InputError("cube dimension too large");
    const std::size_t n = std::size_t(1) << d;
    std::vector<Graph::Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < d; ++bit) {
            Vertex w = v ^ (Vertex(1) << bit);
            if (v < w) edges.emplace_back(v, w);
        }
    return Graph(n, edges);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
    if (parts.empty()) throw InputError("multipartite graph needs at least one part");
    if (std::find(parts.begin(), parts.end(), 0) != parts.end())
        throw InputError("multipartite parts must be positive");
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw InputError("multipartite parts must be sorted in descending order");
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < part_of.size(); ++u)
        for (Vertex v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph(part_of.size(), edges);
}

// Uniform labelled tree via a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InputError("tree needs at least one vertex");
    std::vector<Graph::Edge> edges;
    if (n == 2) edges.emplace_back(0, 1);
    if (n > 2) {
        StreamRng rng({seed, 0});
        std::vector<Vertex> code(n - 2);
        for (auto& x : code) x = Vertex(rng.below(n));
        std::vector<std::size_t> degree(n, 1);
        for (auto x : code) ++degree[x];
        for (auto x : code) {
            Vertex leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --degree[leaf];
            --degree[x];
        }
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == 1) rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
    }
    return Graph(n, edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
    StreamRng rng({seed, 0});
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph generate_family(const FamilySpec& spec) {
    auto need_n = [&] {
        if (spec.n == 0) throw InputError("family requires n >= 1");
    };
    switch (spec.family) {
        case Family::Complete: need_n(); return complete_graph(spec.n);
        case Family::Path: need_n(); return path_graph(spec.n);
        case Family::Cycle: return cycle_graph(spec.n);
        case Family::Cube: return cube_graph(spec.dimension);
        case Family::CompleteMultipartite: return complete_multipartite(spec.parts);
        case Family::RandomTree: need_n(); return random_tree(spec.n, spec.seed);
        case Family::ErdosRenyi: need_n(); return erdos_renyi(spec.n, spec.p, spec.seed);
    }
    throw InputError("unknown family");
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.vertex_count()) throw InputError("permutation size mismatch");
    std::vector<Graph::Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), edges);
}

}  // namespace pebble
