#include "pebble/threshold.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <thread>

namespace pebble {

SeededStream trial_stream(std::uint64_t seed, Count t, std::uint64_t trial) {
    return SeededStream{seed, (static_cast<std::uint64_t>(t) << 32) | trial};
}

namespace {

std::uint64_t count_solvable(RandomModel model, std::size_t n, Count t, std::uint64_t seed, std::uint64_t first,
                             std::uint64_t last) {
    std::uint64_t solvable = 0;
    for (std::uint64_t trial = first; trial < last; ++trial) {
        const auto c = sample(model, n, t, trial_stream(seed, t, trial));
        std::uint64_t odd = 0;
        for (Count x : c.pebbles()) odd += x & 1;
        if (odd + t >= 2 * static_cast<std::uint64_t>(n)) ++solvable;
    }
    return solvable;
}

}  // namespace

SweepRecord estimate_solvable_probability(RandomModel model, std::size_t n, Count t, std::uint64_t trials,
                                          std::uint64_t seed, unsigned workers) {
    if (n == 0) throw InputError("n must be positive");
    if (trials == 0) throw InputError("trials must be positive");
    if (trials > 0xffffffffULL || t > 0xffffffffULL) throw InputError("trials and t must fit in 32 bits");
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(trials, 1024))));

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t first = trials * w / workers;
        const std::uint64_t last = trials * (w + 1) / workers;
        if (workers == 1) {
            partial[w] = count_solvable(model, n, t, seed, first, last);
        } else {
            pool.emplace_back([&, w, first, last] { partial[w] = count_solvable(model, n, t, seed, first, last); });
        }
    }
    for (auto& th : pool) th.join();

    SweepRecord r;
    r.model = model;
    r.n = n;
    r.t = t;
    r.trials = trials;
    for (auto p : partial) r.solvable_count += p;
    r.p_hat = static_cast<double>(r.solvable_count) / static_cast<double>(trials);
    r.seed = seed;
    return r;
}

ThresholdCurve sweep(RandomModel model, std::size_t n, Count t_min, Count t_max, Count step, std::uint64_t trials,
                     std::uint64_t seed, unsigned workers) {
    if (t_min > t_max) throw InputError("t_min exceeds t_max");
    if (step == 0) throw InputError("step must be positive");
    ThresholdCurve curve;
    for (Count t = t_min; t <= t_max; t += step) {
        curve.records.push_back(estimate_solvable_probability(model, n, t, trials, seed, workers));
        if (t_max - t < step) break;
    }
    curve.crossing = crossing_point(curve);
    return curve;
}

std::optional<double> crossing_point(const ThresholdCurve& curve, double level) {
    const auto& rs = curve.records;
    auto below = std::find_if(rs.rbegin(), rs.rend(), [&](const SweepRecord& r) { return r.p_hat < level; });
    if (below == rs.rend() || below == rs.rbegin()) return std::nullopt;
    const SweepRecord& lo = *below;
    const SweepRecord& hi = *std::prev(below);
    const double frac = (level - lo.p_hat) / (hi.p_hat - lo.p_hat);
    return static_cast<double>(lo.t) + frac * (static_cast<double>(hi.t) - static_cast<double>(lo.t));
}

void write_csv(std::ostream& out, const ThresholdCurve& curve, bool with_crossing) {
    out << "model,n,t,trials,solvable_count,p_hat,seed\n";
    char p_hat[32];
    for (const auto& r : curve.records) {
        std::snprintf(p_hat, sizeof p_hat, "%.6f", r.p_hat);
        out << to_string(r.model) << ',' << r.n << ',' << r.t << ',' << r.trials << ',' << r.solvable_count << ','
            << p_hat << ',' << r.seed << '\n';
    }
    if (with_crossing) {
        if (curve.crossing && !curve.records.empty()) {
            char line[96];
            std::snprintf(line, sizeof line, "# crossing t*=%.4f t*/n=%.6f\n", *curve.crossing,
                          *curve.crossing / static_cast<double>(curve.records.front().n));
            out << line;
        } else {
            out << "# crossing none\n";
        }
    }
}

}  // namespace pebble
