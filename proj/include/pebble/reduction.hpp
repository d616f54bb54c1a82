#pragma once

#include "pebble/graph.hpp"
#include "pebble/solvability.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pebble {

// Exact cover by 4-sets: a ground set {0..4n-1} and a family of 4-subsets.
struct X4CInstance {
    std::size_t ground_set_size = 0;
    std::vector<std::vector<std::uint32_t>> sets;

    std::size_t cover_size() const { return ground_set_size / 4; }
};

// Every violated instance invariant, one message each. Empty means valid.
std::vector<std::string> validate_instance(const X4CInstance& x);

// Role of a vertex in the gadget graph.
struct VertexRole {
    enum class Kind { Element, Set, SetBuffer1, SetBuffer2, Collector, PathInterior, Drain };
    Kind kind;
    std::size_t index = 0;  // element, set or path position (1-based along the path)

    std::string tag() const;
};

struct ReductionOutput {
    Graph graph;
    Configuration config;
    std::vector<VertexRole> labels;

    // Vertex numbering: elements, sets, first buffers, second buffers,
    // collector, interior path vertices, drain.
    std::size_t m = 0;
    std::size_t n = 0;
    Vertex element(std::size_t j) const { return Vertex(j); }
    Vertex set(std::size_t i) const { return Vertex(4 * n + i); }
    Vertex buffer1(std::size_t i) const { return Vertex(4 * n + m + i); }
    Vertex buffer2(std::size_t i) const { return Vertex(4 * n + 2 * m + i); }
    Vertex collector() const { return Vertex(4 * n + 3 * m); }
    // k-th vertex on the collector-to-drain path; 0 is the collector, m-n the drain.
    Vertex path(std::size_t k) const { return Vertex(4 * n + 3 * m + k); }
    Vertex drain() const { return path(m - n); }
};

// Gadget graph and configuration that are cover solvable iff the instance
// has an exact cover. Requires a valid instance with more sets than the cover
// size; throws InputError otherwise.
ReductionOutput build_reduction(const X4CInstance& x);

// Indices (ascending) of disjoint sets partitioning the ground set, if any.
std::optional<std::vector<std::size_t>> exact_cover_bruteforce(const X4CInstance& x);

// Explicit solving strategy for a gadget built from an instance with exact
// cover `cover`: each cover set spends 8 pebbles on its elements, every other
// set ships one pebble to the collector through its buffers, and the
// collector drives one pebble down the path to the drain.
MoveCertificate reduction_witness(const ReductionOutput& r, const X4CInstance& x, const std::vector<std::size_t>& cover);

struct EquivalenceReport {
    bool cover_exists = false;
    Outcome pebbling = Outcome::Undecided;
    bool agree = false;
    std::optional<std::vector<std::size_t>> cover;
    std::optional<MoveCertificate> certificate;
    std::uint64_t nodes_expanded = 0;
};

// Runs both sides. An undecided pebbling result leaves `agree` false but is
// reported through `pebbling`, never as a disagreement.
EquivalenceReport reduction_equivalence_check(const X4CInstance& x, std::uint64_t node_budget = 10'000'000);

}  // namespace pebble
