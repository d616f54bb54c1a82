#pragma once

#include "pebble/random_config.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace pebble {

struct SweepRecord {
    RandomModel model = RandomModel::MaxwellBoltzmann;
    std::size_t n = 0;
    Count t = 0;
    std::uint64_t trials = 0;
    std::uint64_t solvable_count = 0;
    double p_hat = 0.0;
    std::uint64_t seed = 0;
};

struct ThresholdCurve {
    std::vector<SweepRecord> records;  // sorted by t, distinct t
    std::optional<double> crossing;    // t where p_hat first rises through 0.5
};

// Stream used by trial `trial` at pebble count t.
SeededStream trial_stream(std::uint64_t seed, Count t, std::uint64_t trial);

// Fraction of random configurations on K_n that are cover solvable, decided
// per trial with the odd-stack criterion X + t >= 2n. Results do not depend
// on the worker count.
SweepRecord estimate_solvable_probability(RandomModel model, std::size_t n, Count t, std::uint64_t trials,
                                          std::uint64_t seed, unsigned workers = 1);

ThresholdCurve sweep(RandomModel model, std::size_t n, Count t_min, Count t_max, Count step, std::uint64_t trials,
                     std::uint64_t seed, unsigned workers = 1);

// Linear interpolation between the last record below `level` and the record
// right after it. Empty if no later record exists.
std::optional<double> crossing_point(const ThresholdCurve& curve, double level = 0.5);

// Columns: model,n,t,trials,solvable_count,p_hat,seed
void write_csv(std::ostream& out, const ThresholdCurve& curve, bool with_crossing = false);

}  // namespace pebble
