#include "pebble/reduction.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pebble {

std::vector<std::string> validate_instance(const X4CInstance& x) {
    std::vector<std::string> errors;
    if (x.ground_set_size == 0 || x.ground_set_size % 4 != 0)
        errors.push_back("ground set size " + std::to_string(x.ground_set_size) + " is not a positive multiple of 4");
    for (std::size_t i = 0; i < x.sets.size(); ++i) {
        const auto& s = x.sets[i];
        const std::string name = "set " + std::to_string(i);
        if (s.size() != 4) errors.push_back(name + " has " + std::to_string(s.size()) + " elements, expected 4");
        if (std::set<std::uint32_t>(s.begin(), s.end()).size() != s.size())
            errors.push_back(name + " repeats an element");
        for (auto e : s)
            if (e >= x.ground_set_size)
                errors.push_back(name + " element " + std::to_string(e) + " is outside the ground set");
    }
    if (x.sets.size() < x.cover_size())
        errors.push_back("family has " + std::to_string(x.sets.size()) + " sets, fewer than the " +
                         std::to_string(x.cover_size()) + " needed for a cover");
    return errors;
}

std::string VertexRole::tag() const {
    const std::string i = std::to_string(index);
    switch (kind) {
        case Kind::Element: return "T_" + i;
        case Kind::Set: return "B_" + i;
        case Kind::SetBuffer1: return "B'_" + i;
        case Kind::SetBuffer2: return "B''_" + i;
        case Kind::Collector: return "v";
        case Kind::PathInterior: return "path_u_" + i;
        case Kind::Drain: return "w";
    }
    return "?";
}

ReductionOutput build_reduction(const X4CInstance& x) {
    if (auto errors = validate_instance(x); !errors.empty()) throw InputError("invalid instance: " + errors.front());
    const std::size_t n = x.cover_size();
    const std::size_t m = x.sets.size();
    if (m <= n) throw InputError("reduction needs more sets than the cover size (m > n)");
    const std::size_t slack = m - n;
    if (slack > 62) throw InputError("m - n too large for 64-bit pebble counts");

    ReductionOutput r;
    r.n = n;
    r.m = m;
    const std::size_t vertex_count = 3 * n + 4 * m + 1;
    std::vector<Count> pebbles(vertex_count, 0);
    r.labels.resize(vertex_count, VertexRole{VertexRole::Kind::Element, 0});
    std::vector<Graph::Edge> edges;

    for (std::size_t j = 0; j < 4 * n; ++j) r.labels[r.element(j)] = {VertexRole::Kind::Element, j};
    for (std::size_t i = 0; i < m; ++i) {
        r.labels[r.set(i)] = {VertexRole::Kind::Set, i};
        r.labels[r.buffer1(i)] = {VertexRole::Kind::SetBuffer1, i};
        r.labels[r.buffer2(i)] = {VertexRole::Kind::SetBuffer2, i};
        pebbles[r.set(i)] = 9;
        pebbles[r.buffer1(i)] = 1;
        pebbles[r.buffer2(i)] = 1;
        for (auto e : x.sets[i]) edges.emplace_back(r.set(i), r.element(e));
        edges.emplace_back(r.set(i), r.buffer1(i));
        edges.emplace_back(r.buffer1(i), r.buffer2(i));
        edges.emplace_back(r.buffer2(i), r.collector());
    }

    r.labels[r.collector()] = {VertexRole::Kind::Collector, 0};
    pebbles[r.collector()] = (Count(1) << slack) - slack + 1;
    for (std::size_t k = 1; k < slack; ++k) {
        r.labels[r.path(k)] = {VertexRole::Kind::PathInterior, k};
        pebbles[r.path(k)] = 1;
    }
    r.labels[r.drain()] = {VertexRole::Kind::Drain, 0};
    for (std::size_t k = 1; k <= slack; ++k) edges.emplace_back(r.path(k - 1), r.path(k));

    r.graph = Graph(vertex_count, edges);
    r.config = Configuration(std::move(pebbles));
    return r;
}

std::optional<std::vector<std::size_t>> exact_cover_bruteforce(const X4CInstance& x) {
    if (auto errors = validate_instance(x); !errors.empty()) throw InputError("invalid instance: " + errors.front());
    const std::size_t size = x.ground_set_size;
    std::vector<std::vector<std::size_t>> containing(size);
    for (std::size_t i = 0; i < x.sets.size(); ++i)
        for (auto e : x.sets[i]) containing[e].push_back(i);

    std::vector<bool> used(size, false);
    std::vector<std::size_t> chosen;
    // Branch on the smallest uncovered element; every partition must use
    // exactly one set containing it.
    std::function<bool()> search = [&]() -> bool {
        auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) return true;
        const std::size_t e = std::size_t(first - used.begin());
        for (std::size_t i : containing[e]) {
            const auto& s = x.sets[i];
            if (std::any_of(s.begin(), s.end(), [&](std::uint32_t y) { return used[y]; })) continue;
            for (auto y : s) used[y] = true;
            chosen.push_back(i);
            if (search()) return true;
            chosen.pop_back();
            for (auto y : s) used[y] = false;
        }
        return false;
    };
    if (!search()) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

MoveCertificate reduction_witness(const ReductionOutput& r, const X4CInstance& x, const std::vector<std::size_t>& cover) {
    MoveCertificate m;
    std::vector<bool> in_cover(r.m, false);
    for (auto i : cover) in_cover.at(i) = true;
    for (std::size_t i = 0; i < r.m; ++i) {
        if (in_cover[i]) {
            for (auto e : x.sets[i]) m.add(r.set(i), r.element(e));
        } else {
            // 8 pebbles on b_i become 4 on b'_i, 2 on b''_i, 1 on v.
            m.add(r.set(i), r.buffer1(i), 4);
            m.add(r.buffer1(i), r.buffer2(i), 2);
            m.add(r.buffer2(i), r.collector(), 1);
        }
    }
    // v now holds 2^(m-n) + 1; halve it down the path so one pebble lands on w.
    const std::size_t slack = r.m - r.n;
    for (std::size_t k = 0; k < slack; ++k) m.add(r.path(k), r.path(k + 1), Count(1) << (slack - 1 - k));
    return m;
}

EquivalenceReport reduction_equivalence_check(const X4CInstance& x, std::uint64_t node_budget) {
    EquivalenceReport report;
    report.cover = exact_cover_bruteforce(x);
    report.cover_exists = report.cover.has_value();
    const auto r = build_reduction(x);
    if (report.cover_exists) {
        auto witness = reduction_witness(r, x, *report.cover);
        if (verify_certificate(r.graph, r.config, witness)) {
            report.pebbling = Outcome::Solvable;
            report.certificate = std::move(witness);
        }
    }
    if (!report.certificate) {
        auto result = solve(r.graph, r.config, SolveOptions{node_budget});
        report.pebbling = result.outcome;
        report.certificate = std::move(result.certificate);
        report.nodes_expanded = result.stats.nodes_expanded;
    }
    if (report.pebbling != Outcome::Undecided)
        report.agree = report.cover_exists == (report.pebbling == Outcome::Solvable);
    return report;
}

}  // namespace pebble
