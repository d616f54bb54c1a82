#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pebble {

using Vertex = std::uint32_t;
using Count = std::uint64_t;

// Raised for malformed graphs, configurations and family parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hop distances between all vertex pairs. Computed once by BFS from every
// source; unreachable pairs hold kUnreachable.
class DistanceMatrix {
public:
    static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

    DistanceMatrix() = default;
    DistanceMatrix(std::size_t n, std::vector<std::uint32_t> dist) : n_(n), dist_(std::move(dist)) {}

    std::size_t size() const { return n_; }
    std::uint32_t operator()(Vertex u, Vertex v) const { return dist_[std::size_t(u) * n_ + v]; }
    bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }
    std::span<const std::uint32_t> row(Vertex u) const { return {dist_.data() + std::size_t(u) * n_, n_}; }

    // Largest finite distance from v.
    std::uint32_t eccentricity(Vertex v) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> dist_;
};

// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph() : Graph(0, {}) {}

    // Accepts duplicate pairs in either orientation; rejects self-loops and
    // out-of-range endpoints with InputError.
    Graph(std::size_t n, std::span<const Edge> edge_list);
    Graph(std::size_t n, std::initializer_list<Edge> edge_list)
        : Graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size())) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted, each edge stored once with first < second.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    const DistanceMatrix& distances() const { return *distances_; }
    bool connected() const;
    // Some pair (u, v) with no path between them, if any.
    std::optional<Edge> unreachable_pair() const;
    // Every vertex adjacent to every other.
    bool is_complete() const;

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::shared_ptr<const DistanceMatrix> distances_;
};

Graph build_graph(std::size_t n, std::span<const Graph::Edge> edge_list);
DistanceMatrix distance_matrix(const Graph& g);

// Per-vertex pebble counts with a cached total. Immutable.
class Configuration {
public:
    Configuration() = default;
    // Throws InputError if the total overflows 64 bits.
    explicit Configuration(std::vector<Count> pebbles);
    Configuration(std::initializer_list<Count> pebbles) : Configuration(std::vector<Count>(pebbles)) {}

    std::size_t size() const { return pebbles_.size(); }
    Count operator[](Vertex v) const { return pebbles_[v]; }
    Count total() const { return total_; }
    const std::vector<Count>& pebbles() const { return pebbles_; }

    bool operator==(const Configuration& other) const { return pebbles_ == other.pebbles_; }

private:
    std::vector<Count> pebbles_;
    Count total_ = 0;
};

// Throws InputError when the configuration length differs from the graph order.
void check_dimensions(const Graph& g, const Configuration& c);

// Named graph families.
enum class Family { Complete, Path, Cycle, Cube, CompleteMultipartite, RandomTree, ErdosRenyi };

struct FamilySpec {
    Family family = Family::Complete;
    std::size_t n = 0;                  // K_n, P_n, C_n, tree, G(n,p)
    std::size_t dimension = 0;          // Q^d
    std::vector<std::size_t> parts;     // K_{r1,...,rm}, descending
    double p = 0.0;                     // G(n,p)
    std::uint64_t seed = 0;             // tree, G(n,p)
};

Graph generate_family(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph cube_graph(std::size_t d);
Graph complete_multipartite(std::span<const std::size_t> parts);
Graph random_tree(std::size_t n, std::uint64_t seed);
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// Maps vertex v to perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace pebble
