#include "pebble/random_config.hpp"

#include <cmath>
#include <numeric>

namespace pebble {

std::string to_string(RandomModel m) { return m == RandomModel::MaxwellBoltzmann ? "mb" : "be"; }

RandomModel parse_model(const std::string& name) {
    if (name == "mb") return RandomModel::MaxwellBoltzmann;
    if (name == "be") return RandomModel::BoseEinstein;
    throw InputError("unknown model '" + name + "' (expected mb or be)");
}

namespace {

void require_vertices(std::size_t n, Count t) {
    if (n == 0 && t > 0) throw InputError("cannot place pebbles on zero vertices");
}

}  // namespace

Configuration sample_mb(std::size_t n, Count t, SeededStream s) {
    require_vertices(n, t);
    std::vector<Count> pebbles(n, 0);
    StreamRng rng(s);
    for (Count i = 0; i < t; ++i) ++pebbles[rng.below(n)];
    return Configuration(std::move(pebbles));
}

Configuration sample_be_polya(std::size_t n, Count t, SeededStream s) {
    require_vertices(n, t);
    std::vector<Count> pebbles(n, 0);
    // One ball per colour to start; each draw returns the ball plus a copy.
    std::vector<std::uint32_t> urn(n);
    std::iota(urn.begin(), urn.end(), 0u);
    urn.reserve(n + t);
    StreamRng rng(s);
    for (Count k = 1; k <= t; ++k) {
        const auto colour = urn[rng.below(urn.size())];
        urn.push_back(colour);
        ++pebbles[colour];
    }
    return Configuration(std::move(pebbles));
}

Configuration sample_be_stars_and_bars(std::size_t n, Count t, SeededStream s) {
    require_vertices(n, t);
    if (n == 0) return Configuration(std::vector<Count>{});
    const std::size_t slots = n + t - 1;
    std::vector<std::size_t> index(slots);
    std::iota(index.begin(), index.end(), std::size_t{0});
    StreamRng rng(s);
    // Partial Fisher-Yates: the first n-1 entries become the bar positions.
    for (std::size_t i = 0; i + 1 < n; ++i) std::swap(index[i], index[i + rng.below(slots - i)]);
    std::vector<bool> bar(slots, false);
    for (std::size_t i = 0; i + 1 < n; ++i) bar[index[i]] = true;
    std::vector<Count> pebbles(n, 0);
    std::size_t part = 0;
    for (std::size_t i = 0; i < slots; ++i) {
        if (bar[i])
            ++part;
        else
            ++pebbles[part];
    }
    return Configuration(std::move(pebbles));
}

Configuration sample(RandomModel model, std::size_t n, Count t, SeededStream s) {
    return model == RandomModel::MaxwellBoltzmann ? sample_mb(n, t, s) : sample_be_polya(n, t, s);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

ExactProbability be_odd_stack_pmf(std::uint64_t n, std::uint64_t t, std::uint64_t x) {
    if (n == 0) throw InputError("pmf needs n >= 1");
    if (x > n || x > t || (t - x) % 2 != 0) return ExactProbability(0);
    const BigInt favourable = binomial(n, x) * binomial((t - x) / 2 + n - 1, n - 1);
    return ExactProbability(favourable, binomial(n + t - 1, n - 1));
}

ExactProbability be_expected_odd_stacks_exact(std::uint64_t n, std::uint64_t t) {
    ExactProbability mean = 0;
    for (std::uint64_t x = t % 2; x <= std::min(n, t); x += 2) mean += ExactProbability(x) * be_odd_stack_pmf(n, t, x);
    return mean;
}

double be_expected_odd_stacks_approx(double n, double t) { return t == 0 ? 0.0 : n * t / (n + 2 * t); }

double mb_expected_odd_stacks(double n, double t) { return n / 2 * (1 - std::pow(1 - 2 / n, t)); }

double mb_variance_odd_stacks(double n, double t) {
    const double q2 = std::pow(1 - 2 / n, 2 * t);
    return n / 4 * (1 - q2) + n * (n - 1) / 4 * (std::pow(1 - 4 / n, t) - q2);
}

double mb_threshold_constant() {
    auto f = [](double a) { return a - 0.5 * std::exp(-2 * a) - 1.5; };
    double lo = 1.0, hi = 2.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double be_threshold_constant() { return (1 + std::sqrt(5.0)) / 2; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace pebble
