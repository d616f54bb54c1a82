#pragma once

#include "pebble/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pebble {

// Parity bookkeeping of a configuration: X odd stacks, E even stacks
// (including empty ones) and the histogram Y_i of stack heights.
struct OddStackSummary {
    std::size_t odd_count = 0;
    std::size_t even_count = 0;
    Count total = 0;
    std::map<Count, std::size_t> histogram;
};

OddStackSummary odd_stack_summary(const Configuration& c);

// Lemma for complete graphs: a configuration on K_n is cover solvable iff
// X + t >= 2n. The graph itself is implied.
bool complete_graph_solvable(std::size_t n, const Configuration& c);

// One pebbling move: two pebbles leave `from`, one arrives at `to`.
struct Move {
    Vertex from = 0;
    Vertex to = 0;
    bool operator==(const Move&) const = default;
};

// Move counts n_ij keyed by ordered pair (i, j). Zero counts are never stored.
class MoveCertificate {
public:
    using Key = std::pair<Vertex, Vertex>;

    void add(Vertex from, Vertex to, Count count = 1);
    Count count(Vertex from, Vertex to) const;
    Count total_moves() const;
    bool empty() const { return moves_.empty(); }
    const std::map<Key, Count>& moves() const { return moves_; }

    static MoveCertificate from_sequence(std::span<const Move> seq);

    bool operator==(const MoveCertificate&) const = default;

private:
    std::map<Key, Count> moves_;
};

// Checks the certificate inequalities C(k) + sum_l n_lk - 2 sum_l n_kl >= 1
// and that every move lies on an edge. Linear in the certificate size.
// Throws InputError on a dimension mismatch.
bool verify_certificate(const Graph& g, const Configuration& c, const MoveCertificate& m);

// Raised when a move sequence cannot be played.
class IllegalMoveError : public InputError {
public:
    IllegalMoveError(std::size_t index, const std::string& what) : InputError(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

// Greedy scheduling of a verified certificate: keep making any outstanding
// move whose source holds at least two pebbles. Throws std::logic_error if
// the loop stalls, which only happens when the certificate is invalid.
std::vector<Move> execute_certificate(const Graph& g, const Configuration& c, const MoveCertificate& m);

// Replays moves in order. Throws IllegalMoveError naming the first move that
// is not on an edge or whose source holds fewer than two pebbles.
Configuration apply_moves(const Graph& g, const Configuration& c, std::span<const Move> seq);

enum class Outcome { Solvable, Unsolvable, Undecided };

enum class Strategy { Lemma1, StackingBound, AllCovered, TrivialDeficit, Search };

std::string to_string(Outcome o);
std::string to_string(Strategy s);

struct SolveStats {
    std::uint64_t nodes_expanded = 0;
    Strategy strategy = Strategy::Search;
};

struct SolveResult {
    Outcome outcome = Outcome::Undecided;
    std::optional<MoveCertificate> certificate;  // present iff solvable
    SolveStats stats;

    bool solvable() const { return outcome == Outcome::Solvable; }
};

struct SolveOptions {
    std::uint64_t node_budget = 10'000'000;
};

// Exact cover-solvability decision. Answers are never guessed: when the node
// budget runs out the outcome is Undecided. Disconnected graphs are solvable
// iff every component is.
SolveResult solve(const Graph& g, const Configuration& c, const SolveOptions& options = {});

// Exhaustive memoized search with no pruning. Reference oracle for small
// inputs (about 6 vertices, 14 pebbles).
bool solve_bruteforce(const Graph& g, const Configuration& c);

// Floor of sum_u C(u) * 2^-dist(u,v) over vertices reachable from v.
// Non-increasing under pebbling moves, so a value of 0 means v can never be covered.
Count target_weight_floor(const Graph& g, const Configuration& c, Vertex v);

}  // namespace pebble
