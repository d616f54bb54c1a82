#pragma once

#include "pebble/bigint.hpp"
#include "pebble/graph.hpp"
#include "pebble/rng.hpp"

#include <string>

namespace pebble {

// Maxwell-Boltzmann: t distinguishable pebbles, each on an independent
// uniform vertex. Bose-Einstein: every composition of t into n parts is
// equally likely.
enum class RandomModel { MaxwellBoltzmann, BoseEinstein };

std::string to_string(RandomModel m);      // "mb" / "be"
RandomModel parse_model(const std::string& name);

using ExactProbability = Rational;

Configuration sample_mb(std::size_t n, Count t, SeededStream s);

// Polya urn: draw k picks vertex j with probability (1 + count_j) / (n + k - 1),
// which makes the final counts uniform over compositions.
Configuration sample_be_polya(std::size_t n, Count t, SeededStream s);

// Direct uniform composition via a random choice of n-1 bar positions among
// n+t-1 slots. Independent cross-check of the urn sampler.
Configuration sample_be_stars_and_bars(std::size_t n, Count t, SeededStream s);

Configuration sample(RandomModel model, std::size_t n, Count t, SeededStream s);

BigInt binomial(std::uint64_t n, std::uint64_t k);

// P(X = x) for the number of odd stacks under Bose-Einstein placement.
ExactProbability be_odd_stack_pmf(std::uint64_t n, std::uint64_t t, std::uint64_t x);
ExactProbability be_expected_odd_stacks_exact(std::uint64_t n, std::uint64_t t);
// n t / (n + 2t)
double be_expected_odd_stacks_approx(double n, double t);

// (n/2)(1 - (1 - 2/n)^t)
double mb_expected_odd_stacks(double n, double t);
// (n/4)(1 - (1-2/n)^{2t}) + (n(n-1)/4)[(1-4/n)^t - (1-2/n)^{2t}], n >= 2
double mb_variance_odd_stacks(double n, double t);

// Root of A - e^{-2A}/2 - 3/2 on [1, 2], by bisection to 1e-12.
double mb_threshold_constant();
// Golden ratio.
double be_threshold_constant();

double to_double(const Rational& r);
std::string to_fraction_string(const Rational& r);

}  // namespace pebble
