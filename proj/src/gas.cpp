#include "eqm/gas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace eqm {

void GasConfig::validate() const {
    if (n < 1) throw std::invalid_argument("gas: n >= 1 required");
    if (!(beta > 0.0)) throw std::invalid_argument("gas: beta > 0 required");
    if (!(sweeps > burn_in) || burn_in < 0)
        throw std::invalid_argument("gas: sweeps > burn_in >= 0 required");
    if (!(step_scale > 0.0)) throw std::invalid_argument("gas: step_scale > 0 required");
}

double log_weight(const Polynomial& Q, const GasConfig& config,
                  const std::vector<double>& positions) {
    for (double x : positions)
        if (x < config.barriers.sigma || x > config.barriers.tau)
            throw std::invalid_argument("log_weight: position outside the barriers");

    double lw = 0.0;
    for (double x : positions)
        lw -= config.n * (config.beta / 2.0) * Q(x);
    for (size_t i = 0; i < positions.size(); ++i)
        for (size_t j = i + 1; j < positions.size(); ++j) {
            const double d = std::abs(positions[i] - positions[j]);
            if (d == 0.0) return -std::numeric_limits<double>::infinity();
            lw += config.beta * std::log(d);
        }
    return lw;
}

ChainResult run_chain(const Polynomial& Q, const GasConfig& config) {
    config.validate();
    const int n = config.n;
    const double sigma = config.barriers.sigma, tau = config.barriers.tau;

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Initial configuration: spread across the accessible window near the
    // origin, strictly inside the barriers.
    std::vector<double> x(n);
    const double lo = std::max(sigma, -2.0), hi = std::min(tau, 2.0);
    for (int i = 0; i < n; ++i)
        x[i] = lo + (hi - lo) * (i + 1.0) / (n + 1.0);

    ChainResult result;
    result.samples.reserve(static_cast<size_t>(config.sweeps - config.burn_in));
    long accepted = 0, proposed = 0;

    for (long sweep = 0; sweep < config.sweeps; ++sweep) {
        for (int i = 0; i < n; ++i) {
            ++proposed;
            const double xi = x[i];
            const double xp = xi + config.step_scale * (unit(rng) - 0.5);
            if (xp < sigma || xp > tau) continue;

            bool coincident = false;
            double delta = -config.n * (config.beta / 2.0) * (Q(xp) - Q(xi));
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dn = std::abs(xp - x[j]);
                if (dn < 1e-14) { coincident = true; break; }
                delta += config.beta * (std::log(dn) - std::log(std::abs(xi - x[j])));
            }
            if (coincident) continue;

            if (delta >= 0.0 || std::log(unit(rng)) < delta) {
                x[i] = xp;
                ++accepted;
            }
        }
        if (sweep >= config.burn_in) {
            std::vector<double> snap = x;
            std::sort(snap.begin(), snap.end());
            result.samples.push_back(std::move(snap));
        }
    }
    result.acceptance_rate = proposed ? static_cast<double>(accepted) / proposed : 0.0;
    return result;
}

double empirical_distance(const std::vector<std::vector<double>>& samples,
                          const EquilibriumMeasure& m) {
    if (samples.empty()) throw std::invalid_argument("empirical_distance: no samples");
    std::vector<double> pooled;
    for (const auto& s : samples) pooled.insert(pooled.end(), s.begin(), s.end());
    std::sort(pooled.begin(), pooled.end());

    const double N = static_cast<double>(pooled.size());
    double ks = 0.0;
    for (size_t i = 0; i < pooled.size(); ++i) {
        const double F = cdf(m, pooled[i]);
        ks = std::max(ks, std::abs((i + 1) / N - F));
        ks = std::max(ks, std::abs(i / N - F));
    }
    return ks;
}

} // namespace eqm
