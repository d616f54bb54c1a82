#pragma once

#include <cstdint>

namespace pebble {

// Identifies one reproducible random stream: the output sequence is a pure
// function of (seed, stream_index).
struct SeededStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_index = 0;
};

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator (SplitMix64 over a key derived from the stream).
// Portable: no std::*_distribution, so sequences match across platforms.
class StreamRng {
public:
    explicit constexpr StreamRng(SeededStream s)
        : state_(mix64(s.seed ^ mix64(s.stream_index + 0x632be59bd9b4e019ULL))) {}

    constexpr std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform in [0, bound), bound > 0. Lemire's multiply-and-reject.
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace pebble
