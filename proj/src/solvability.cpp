#include "pebble/solvability.hpp"

#include "pebble/cover_number.hpp"
#include "pebble/rng.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace pebble {

OddStackSummary odd_stack_summary(const Configuration& c) {
    OddStackSummary s;
    s.total = c.total();
    for (Count x : c.pebbles()) {
        if (x % 2 == 1)
            ++s.odd_count;
        else
            ++s.even_count;
        ++s.histogram[x];
    }
    return s;
}

bool complete_graph_solvable(std::size_t n, const Configuration& c) {
    if (c.size() != n) throw InputError("configuration length differs from n");
    const auto s = odd_stack_summary(c);
    // X + t >= 2n, written to avoid overflow of t + X.
    const unsigned __int128 lhs = static_cast<unsigned __int128>(s.odd_count) + s.total;
    return lhs >= static_cast<unsigned __int128>(2) * n;
}

void MoveCertificate::add(Vertex from, Vertex to, Count count) {
    if (count == 0) return;
    moves_[{from, to}] += count;
}

Count MoveCertificate::count(Vertex from, Vertex to) const {
    auto it = moves_.find({from, to});
    return it == moves_.end() ? 0 : it->second;
}

Count MoveCertificate::total_moves() const {
    Count total = 0;
    for (const auto& [key, k] : moves_) total += k;
    return total;
}

MoveCertificate MoveCertificate::from_sequence(std::span<const Move> seq) {
    MoveCertificate m;
    for (auto mv : seq) m.add(mv.from, mv.to);
    return m;
}

bool verify_certificate(const Graph& g, const Configuration& c, const MoveCertificate& m) {
    check_dimensions(g, c);
    const std::size_t n = g.vertex_count();
    std::vector<__int128> balance(n);
    for (Vertex k = 0; k < n; ++k) balance[k] = c[k];
    for (const auto& [key, k] : m.moves()) {
        auto [i, j] = key;
        if (i >= n || j >= n) throw InputError("certificate references a vertex outside the graph");
        if (!g.has_edge(i, j)) return false;
        balance[j] += k;
        balance[i] -= 2 * static_cast<__int128>(k);
    }
    return std::all_of(balance.begin(), balance.end(), [](__int128 b) { return b >= 1; });
}

std::vector<Move> execute_certificate(const Graph& g, const Configuration& c, const MoveCertificate& m) {
    check_dimensions(g, c);
    const std::size_t n = g.vertex_count();
    std::vector<Count> pebbles = c.pebbles();
    // Outstanding moves per source.
    std::vector<std::vector<std::pair<Vertex, Count>>> pending(n);
    for (const auto& [key, k] : m.moves()) {
        if (key.first >= n || key.second >= n) throw InputError("certificate references a vertex outside the graph");
        pending[key.first].emplace_back(key.second, k);
    }

    std::vector<Move> seq;
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < n; ++v)
        if (pebbles[v] >= 2 && !pending[v].empty()) ready.push_back(v);

    while (!ready.empty()) {
        Vertex u = ready.back();
        ready.pop_back();
        auto& out = pending[u];
        while (pebbles[u] >= 2 && !out.empty()) {
            auto& [to, left] = out.back();
            pebbles[u] -= 2;
            pebbles[to] += 1;
            seq.push_back({u, to});
            if (pebbles[to] == 2 && !pending[to].empty()) ready.push_back(to);
            if (--left == 0) out.pop_back();
        }
    }

    for (Vertex v = 0; v < n; ++v) {
        if (!pending[v].empty())
            throw std::logic_error("certificate schedule stalled at vertex " + std::to_string(v) +
                                   "; certificate does not verify");
        if (pebbles[v] == 0)
            throw std::logic_error("certificate leaves vertex " + std::to_string(v) + " uncovered");
    }
    return seq;
}

Configuration apply_moves(const Graph& g, const Configuration& c, std::span<const Move> seq) {
    check_dimensions(g, c);
    std::vector<Count> pebbles = c.pebbles();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto [u, w] = seq[i];
        if (!g.has_edge(u, w))
            throw IllegalMoveError(i, "move " + std::to_string(i) + " (" + std::to_string(u) + "->" +
                                          std::to_string(w) + ") is not along an edge");
        if (pebbles[u] < 2)
            throw IllegalMoveError(i, "move " + std::to_string(i) + " (" + std::to_string(u) + "->" +
                                          std::to_string(w) + ") needs two pebbles on the source");
        pebbles[u] -= 2;
        pebbles[w] += 1;
    }
    return Configuration(std::move(pebbles));
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Solvable: return "solvable";
        case Outcome::Unsolvable: return "unsolvable";
        case Outcome::Undecided: return "undecided";
    }
    return "?";
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Lemma1: return "lemma1";
        case Strategy::StackingBound: return "stacking-bound";
        case Strategy::AllCovered: return "all-covered";
        case Strategy::TrivialDeficit: return "trivial-deficit";
        case Strategy::Search: return "search";
    }
    return "?";
}

namespace {

using DistanceOrder = std::vector<std::pair<Vertex, std::uint32_t>>;

// Vertices reachable from v, ordered by decreasing distance to v.
DistanceOrder distance_order(const Graph& g, Vertex v) {
    const auto& d = g.distances();
    DistanceOrder order;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (d.reachable(u, v)) order.emplace_back(u, d(u, v));
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return order;
}

// floor(sum_u (value(u) - offset) * 2^-dist(u,v)) by Horner over distance
// shells: floor(f_d) = S_d + floor(floor(f_{d+1}) / 2) holds for signed sums,
// so arithmetic shifts keep the result exact.
template <class T>
__int128 shell_floor(const DistanceOrder& order, const T* value, __int128 offset) {
    __int128 acc = 0;
    std::uint32_t level = order.empty() ? 0 : order.front().second;
    for (auto [u, dist] : order) {
        if (dist < level) {
            const std::uint32_t shift = level - dist;
            acc = shift >= 126 ? (acc < 0 ? -1 : 0) : acc >> shift;
            level = dist;
        }
        acc += static_cast<__int128>(value[u]) - offset;
    }
    return level >= 126 ? (acc < 0 ? -1 : 0) : acc >> level;
}

// Open-addressing set of fixed-width vectors stored in one arena.
template <class T>
class StateSet {
public:
    explicit StateSet(std::size_t width) : width_(width), slots_(1024, 0) {}

    bool contains(const T* s) const {
        for (std::size_t i = hash(s) & mask(); slots_[i] != 0; i = (i + 1) & mask())
            if (std::equal(s, s + width_, row(slots_[i] - 1))) return true;
        return false;
    }

    void insert(const T* s) {
        if (2 * (count_ + 1) > slots_.size()) grow();
        std::size_t i = hash(s) & mask();
        while (slots_[i] != 0) {
            if (std::equal(s, s + width_, row(slots_[i] - 1))) return;
            i = (i + 1) & mask();
        }
        arena_.insert(arena_.end(), s, s + width_);
        slots_[i] = ++count_;
    }

private:
    std::size_t mask() const { return slots_.size() - 1; }
    const T* row(std::uint64_t index) const { return arena_.data() + index * width_; }

    std::uint64_t hash(const T* s) const {
        std::uint64_t h = 0x84222325cbf29ce4ULL;
        for (std::size_t i = 0; i < width_; ++i) h = mix64(h ^ (static_cast<std::uint64_t>(s[i]) + i * 0x9e37ULL));
        return h;
    }

    void grow() {
        std::vector<std::uint64_t> old(slots_.size() * 2, 0);
        old.swap(slots_);
        for (auto slot : old) {
            if (slot == 0) continue;
            std::size_t i = hash(row(slot - 1)) & mask();
            while (slots_[i] != 0) i = (i + 1) & mask();
            slots_[i] = slot;
        }
    }

    std::size_t width_;
    std::size_t count_ = 0;
    std::vector<T> arena_;
    std::vector<std::uint64_t> slots_;
};

struct BudgetExhausted {};

// Depth-first search over move certificates. A state is the balance vector
// b(k) = C(k) + sum_l n_lk - 2 sum_l n_kl, which may go negative: certificates
// ignore move order, and any certificate can later be scheduled legally.
// Balances only fall in total, so the state graph is acyclic; dead states are
// memoized. From a state with some b(k) <= 0 every completion adds a move
// into k, so branching over k's neighbours alone is complete.
template <class T>
class CertificateSearch {
public:
    CertificateSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.vertex_count()), budget_(budget), dead_(n_) {
        orders_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) orders_.push_back(distance_order(g, v));
    }

    std::uint64_t nodes() const { return nodes_; }

    // Move list of a certificate, or empty optional when none exists.
    // Throws BudgetExhausted.
    std::optional<std::vector<Move>> run(const Configuration& c) {
        std::vector<T> root(c.pebbles().begin(), c.pebbles().end());
        const auto total = static_cast<__int128>(c.total());
        if (satisfied(root.data())) return std::vector<Move>{};
        if (!viable(root.data(), total)) return std::nullopt;

        std::vector<Frame> stack;
        push(stack, std::move(root), total);
        std::vector<T> child(n_);
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next == top.children.size()) {
                dead_.insert(top.state.data());
                stack.pop_back();
                continue;
            }
            const Move mv = top.children[top.next++];
            std::copy(top.state.begin(), top.state.end(), child.begin());
            child[mv.from] -= 2;
            child[mv.to] += 1;
            const __int128 total_after = top.total - 1;
            if (satisfied(child.data())) {
                std::vector<Move> moves;
                for (const auto& f : stack) moves.push_back(f.children[f.next - 1]);
                return moves;
            }
            if (dead_.contains(child.data())) continue;
            if (!viable(child.data(), total_after)) {
                dead_.insert(child.data());
                continue;
            }
            push(stack, child, total_after);
        }
        return std::nullopt;
    }

private:
    struct Frame {
        std::vector<T> state;
        __int128 total;
        std::vector<Move> children;
        std::size_t next = 0;
    };

    void push(std::vector<Frame>& stack, std::vector<T> state, __int128 total) {
        if (++nodes_ > budget_) throw BudgetExhausted{};
        Frame f{std::move(state), total, {}, 0};
        f.children = branch(f.state.data());
        stack.push_back(std::move(f));
    }

    bool satisfied(const T* b) const { return std::all_of(b, b + n_, [](T x) { return x >= 1; }); }

    // Necessary conditions for some completion to exist:
    //  * every move adds one to a single balance and removes one pebble in
    //    total, so the surplus sum(b) - n must pay for every missing unit;
    //  * sum_u b(u) 2^-dist(u,v) never increases under a move and ends at
    //    least sum_u 2^-dist(u,v), for every v.
    bool viable(const T* b, __int128 total) const {
        __int128 missing = 0;
        for (std::size_t k = 0; k < n_; ++k)
            if (b[k] < 1) missing += 1 - static_cast<__int128>(b[k]);
        if (total - static_cast<__int128>(n_) < missing) return false;
        for (Vertex v = 0; v < n_; ++v)
            if (shell_floor(orders_[v], b, 1) < 0) return false;
        return true;
    }

    // Moves into the deficient vertex with the fewest neighbours, largest
    // sources first.
    std::vector<Move> branch(const T* b) const {
        std::optional<Vertex> target;
        for (Vertex k = 0; k < n_; ++k) {
            if (b[k] >= 1) continue;
            if (!target || g_.degree(k) < g_.degree(*target)) target = k;
        }
        std::vector<Move> out;
        if (!target) return out;
        for (Vertex l : g_.neighbors(*target)) out.push_back({l, *target});
        std::stable_sort(out.begin(), out.end(), [b](const Move& x, const Move& y) { return b[x.from] > b[y.from]; });
        return out;
    }

    const Graph& g_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<DistanceOrder> orders_;
    StateSet<T> dead_;
};

template <class T>
SolveResult run_search(const Graph& g, const Configuration& c, const SolveOptions& options, Strategy strategy) {
    CertificateSearch<T> search(g, options.node_budget);
    SolveResult result;
    result.stats.strategy = strategy;
    try {
        if (auto moves = search.run(c)) {
            result.outcome = Outcome::Solvable;
            result.certificate = MoveCertificate::from_sequence(*moves);
        } else {
            result.outcome = Outcome::Unsolvable;
        }
    } catch (const BudgetExhausted&) {
        result.outcome = Outcome::Undecided;
    }
    result.stats.nodes_expanded = search.nodes();
    return result;
}

MoveCertificate complete_graph_certificate(const Configuration& c) {
    MoveCertificate m;
    std::vector<Vertex> empties;
    for (Vertex v = 0; v < c.size(); ++v)
        if (c[v] == 0) empties.push_back(v);
    auto next = empties.begin();
    for (Vertex v = 0; v < c.size() && next != empties.end(); ++v) {
        // A stack of 2i+1 or 2i+2 pebbles can feed i empty vertices.
        Count spare = c[v] == 0 ? 0 : (c[v] - 1) / 2;
        for (; spare > 0 && next != empties.end(); --spare, ++next) m.add(v, *next);
    }
    return m;
}

}  // namespace

Count target_weight_floor(const Graph& g, const Configuration& c, Vertex v) {
    check_dimensions(g, c);
    return static_cast<Count>(shell_floor(distance_order(g, v), c.pebbles().data(), 0));
}

SolveResult solve(const Graph& g, const Configuration& c, const SolveOptions& options) {
    check_dimensions(g, c);
    const std::size_t n = g.vertex_count();
    if (n == 0) throw InputError("graph has no vertices");

    SolveResult result;
    const auto& pebbles = c.pebbles();
    if (std::all_of(pebbles.begin(), pebbles.end(), [](Count x) { return x >= 1; })) {
        result.outcome = Outcome::Solvable;
        result.certificate = MoveCertificate{};
        result.stats.strategy = Strategy::AllCovered;
        return result;
    }

    if (g.is_complete()) {
        result.stats.strategy = Strategy::Lemma1;
        if (complete_graph_solvable(n, c)) {
            result.outcome = Outcome::Solvable;
            result.certificate = complete_graph_certificate(c);
        } else {
            result.outcome = Outcome::Unsolvable;
        }
        return result;
    }

    bool deficit = c.total() < n;
    for (Vertex v = 0; v < n && !deficit; ++v)
        if (c[v] == 0 && target_weight_floor(g, c, v) == 0) deficit = true;
    if (deficit) {
        result.outcome = Outcome::Unsolvable;
        result.stats.strategy = Strategy::TrivialDeficit;
        return result;
    }

    Strategy strategy = Strategy::Search;
    if (g.connected() && BigInt(c.total()) >= cover_pebbling_number(g).lambda) strategy = Strategy::StackingBound;

    // Balances stay within [-2t, t].
    const Count t = c.total();
    if (t <= 16'000) return run_search<std::int16_t>(g, c, options, strategy);
    if (t <= 1'000'000'000) return run_search<std::int32_t>(g, c, options, strategy);
    if (t <= (Count(1) << 61)) return run_search<std::int64_t>(g, c, options, strategy);
    throw InputError("pebble total too large for search");
}

namespace {

bool bruteforce_from(const Graph& g, std::vector<Count>& s, std::set<std::vector<Count>>& dead) {
    if (std::all_of(s.begin(), s.end(), [](Count x) { return x >= 1; })) return true;
    if (dead.count(s)) return false;
    for (Vertex u = 0; u < s.size(); ++u) {
        if (s[u] < 2) continue;
        for (Vertex w : g.neighbors(u)) {
            s[u] -= 2;
            s[w] += 1;
            const bool ok = bruteforce_from(g, s, dead);
            s[u] += 2;
            s[w] -= 1;
            if (ok) return true;
        }
    }
    dead.insert(s);
    return false;
}

}  // namespace

bool solve_bruteforce(const Graph& g, const Configuration& c) {
    check_dimensions(g, c);
    std::vector<Count> s = c.pebbles();
    std::set<std::vector<Count>> dead;
    return bruteforce_from(g, s, dead);
}

}  // namespace pebble
