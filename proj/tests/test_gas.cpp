#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqm/gas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

using eqm::Barriers;
using eqm::GasConfig;
using eqm::Polynomial;

namespace {
const Polynomial kGauss{0.0, 0.0, 1.0};
const double kInf = std::numeric_limits<double>::infinity();
} // namespace

TEST_CASE("config validation") {
    GasConfig c;
    CHECK_NOTHROW(c.validate());
    c.n = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.n = 4;
    c.burn_in = c.sweeps;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.burn_in = 0;
    c.step_scale = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("log_weight hand values") {
    GasConfig c;
    c.beta = 2.0;

    c.n = 1;
    CHECK(eqm::log_weight(kGauss, c, {0.5}) == doctest::Approx(-0.25));

    c.n = 2;
    CHECK(eqm::log_weight(Polynomial{}, c, {0.0, 1.0}) == doctest::Approx(0.0));

    c.n = 3;
    c.beta = 1.0;
    CHECK(eqm::log_weight(kGauss, c, {-1.0, 0.0, 1.0}) ==
          doctest::Approx(-3.0 + std::log(2.0)));

    CHECK(eqm::log_weight(Polynomial{}, c, {0.3, 0.3}) == -kInf);
    c.barriers = Barriers(0.0, 1.0);
    CHECK_THROWS_AS(eqm::log_weight(kGauss, c, {-0.5}), std::invalid_argument);
}

TEST_CASE("chain determinism and barrier enforcement") {
    GasConfig c;
    c.n = 8;
    c.sweeps = 300;
    c.burn_in = 50;
    c.seed = 42;
    c.barriers = Barriers(0.0, kInf);

    const auto r1 = eqm::run_chain(kGauss, c);
    const auto r2 = eqm::run_chain(kGauss, c);
    CHECK(r1.samples == r2.samples);
    CHECK(r1.acceptance_rate == r2.acceptance_rate);
    CHECK(r1.samples.size() == 250);

    double min_seen = kInf;
    for (const auto& s : r1.samples) {
        CHECK(std::is_sorted(s.begin(), s.end()));
        min_seen = std::min(min_seen, s.front());
    }
    CHECK(min_seen >= 0.0);

    GasConfig c3 = c;
    c3.seed = 43;
    CHECK(eqm::run_chain(kGauss, c3).samples != r1.samples);
}

TEST_CASE("acceptance rate in the calibrated band") {
    GasConfig c;
    c.n = 8;
    c.sweeps = 2000;
    c.burn_in = 200;
    c.step_scale = 0.5;
    c.seed = 7;
    const auto r = eqm::run_chain(kGauss, c);
    CHECK(r.acceptance_rate >= 0.2);
    CHECK(r.acceptance_rate <= 0.7);
}

TEST_CASE("KS distance: degenerate and synthetic exact sampling") {
    const auto m = eqm::build_measure(kGauss, Barriers());

    // Single sample at the median.
    std::vector<std::vector<double>> one = {{0.0}};
    CHECK(eqm::empirical_distance(one, m) == doctest::Approx(0.5));

    // Inverse-CDF draws from the measure itself: KS must scale like 1.36/sqrt(N).
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> draws(100000);
    for (auto& d : draws) {
        const double u = unit(rng);
        double lo = m.a(), hi = m.b();
        for (int it = 0; it < 50; ++it) {
            const double mid = 0.5 * (lo + hi);
            (eqm::cdf(m, mid) < u ? lo : hi) = mid;
        }
        d = 0.5 * (lo + hi);
    }
    CHECK(eqm::empirical_distance({draws}, m) <= 0.01);
}

TEST_CASE("detailed balance smoke test: two particles on a discretized square") {
    // Q = 0 on [0,1] with beta = 2: stationary density prop. to (x-y)^2.
    GasConfig c;
    c.n = 2;
    c.beta = 2.0;
    c.sweeps = 400000;
    c.burn_in = 10000;
    c.step_scale = 0.4;
    c.seed = 99;
    c.barriers = Barriers(0.0, 1.0);
    const auto r = eqm::run_chain(Polynomial{}, c);

    constexpr int kBins = 20;
    // Sorted snapshots live on the lower triangle; symmetrize analytically.
    std::vector<double> counts(kBins * kBins, 0.0);
    for (const auto& s : r.samples) {
        const int i = std::min(kBins - 1, static_cast<int>(s[0] * kBins));
        const int j = std::min(kBins - 1, static_cast<int>(s[1] * kBins));
        counts[static_cast<size_t>(i * kBins + j)] += 0.5;
        counts[static_cast<size_t>(j * kBins + i)] += 0.5;
    }

    // Exact bin masses of Z^-1 (x-y)^2 on the unit square (Z = 1/6).
    const double N = static_cast<double>(r.samples.size());
    auto cell_mass = [&](int i, int j) {
        auto m1 = [](double lo, double hi) { return 0.5 * (hi * hi - lo * lo); };
        auto m2 = [](double lo, double hi) { return (hi * hi * hi - lo * lo * lo) / 3.0; };
        const double xl = static_cast<double>(i) / kBins, xh = (i + 1.0) / kBins;
        const double yl = static_cast<double>(j) / kBins, yh = (j + 1.0) / kBins;
        const double w = 1.0 / kBins;
        return 6.0 * (m2(xl, xh) * w + w * m2(yl, yh) - 2.0 * m1(xl, xh) * m1(yl, yh));
    };
    int failures = 0;
    for (int i = 0; i < kBins; ++i)
        for (int j = 0; j < kBins; ++j) {
            const double p = cell_mass(i, j);
            const double se = std::sqrt(std::max(p * (1.0 - p) / N, 1e-12));
            // Correlated sweeps inflate the variance; allow an effective
            // sample size well below the sweep count.
            const double slack = 8.0;
            if (std::abs(counts[static_cast<size_t>(i * kBins + j)] / N - p) > 3.0 * slack * se)
                ++failures;
        }
    CHECK(failures <= 8); // 2% of 400 bins
}

TEST_CASE("beta does not move the limit") {
    const auto m = eqm::build_measure(kGauss, Barriers());
    for (const double beta : {1.0, 2.0, 4.0}) {
        GasConfig c;
        c.n = 16;
        c.beta = beta;
        c.sweeps = 30000;
        c.burn_in = 3000;
        c.seed = 11;
        const double ks = eqm::empirical_distance(eqm::run_chain(kGauss, c).samples, m);
        CHECK(ks <= 0.05 * 1.5);
    }
}
