#include <doctest.h>

#include "pebble/threshold.hpp"

#include <cmath>
#include <sstream>

using namespace pebble;

TEST_CASE("exactness anchors") {
    for (auto model : {RandomModel::MaxwellBoltzmann, RandomModel::BoseEinstein})
        for (std::size_t n : {1, 5, 40}) {
            CHECK(estimate_solvable_probability(model, n, 2 * n - 1, 200, 3).p_hat == 1.0);
            CHECK(estimate_solvable_probability(model, n, n - 1, 200, 3).p_hat == 0.0);
        }
}

TEST_CASE("BE two vertices two pebbles") {
    const auto r = estimate_solvable_probability(RandomModel::BoseEinstein, 2, 2, 100000, 17);
    CHECK(std::abs(r.p_hat - 1.0 / 3) < 0.01);
    CHECK(r.solvable_count <= r.trials);
}

TEST_CASE("BE estimate agrees with the exact odd-stack law") {
    for (auto [n, t] : {std::pair<std::size_t, Count>{6, 8}, {10, 15}, {20, 31}}) {
        Rational exact = 0;
        for (Count x = 0; x <= t; ++x)
            if (x + t >= 2 * n) exact += be_odd_stack_pmf(n, t, x);
        const double p = to_double(exact);
        const std::uint64_t trials = 40000;
        const auto r = estimate_solvable_probability(RandomModel::BoseEinstein, n, t, trials, 8);
        CHECK(std::abs(r.p_hat - p) <= 4 * std::sqrt(p * (1 - p) / trials) + 1e-12);
    }
}

TEST_CASE("worker count does not change results") {
    const auto one = sweep(RandomModel::MaxwellBoltzmann, 60, 70, 110, 5, 500, 99, 1);
    const auto four = sweep(RandomModel::MaxwellBoltzmann, 60, 70, 110, 5, 500, 99, 4);
    std::ostringstream a, b;
    write_csv(a, one, true);
    write_csv(b, four, true);
    CHECK(a.str() == b.str());
}

TEST_CASE("sweep shape and CSV") {
    const auto curve = sweep(RandomModel::BoseEinstein, 10, 0, 9, 3, 50, 1);
    REQUIRE(curve.records.size() == 4);
    CHECK(curve.records.back().t == 9);
    for (const auto& r : curve.records) CHECK(r.p_hat == 0.0);
    CHECK_FALSE(curve.crossing);
    std::ostringstream out;
    write_csv(out, curve, true);
    CHECK(out.str().rfind("model,n,t,trials,solvable_count,p_hat,seed\nbe,10,0,50,0,0.000000,1\n", 0) == 0);
    CHECK(out.str().find("# crossing none") != std::string::npos);
    CHECK_THROWS_AS(sweep(RandomModel::BoseEinstein, 10, 5, 4, 1, 10, 1), InputError);
    CHECK_THROWS_AS(sweep(RandomModel::BoseEinstein, 10, 5, 6, 0, 10, 1), InputError);
}

TEST_CASE("crossing_point") {
    auto make = [](std::vector<std::pair<Count, double>> pts) {
        ThresholdCurve c;
        for (auto [t, p] : pts) c.records.push_back(SweepRecord{RandomModel::BoseEinstein, 10, t, 10, 0, p, 0});
        return c;
    };
    CHECK(*crossing_point(make({{10, 0.2}, {12, 0.8}})) == doctest::Approx(11.0));
    CHECK(*crossing_point(make({{5, 0.0}, {6, 1.0}})) == doctest::Approx(5.5));
    CHECK_FALSE(crossing_point(make({{5, 0.0}, {6, 0.0}})));
    CHECK_FALSE(crossing_point(make({{5, 0.9}, {6, 1.0}})));
    CHECK(*crossing_point(make({{1, 0.1}, {2, 0.6}, {3, 0.4}, {4, 0.9}})) == doctest::Approx(3.2));
}
