#pragma once

#include "eqm/edge_solver.hpp"
#include "eqm/measure.hpp"
#include "eqm/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace eqm {

/// Parameters of the confined log-gas sampler.
struct GasConfig {
    int n = 8;                 // number of eigenvalues
    double beta = 2.0;         // Dyson index, any positive real
    long sweeps = 1000;        // total sweeps including burn-in
    long burn_in = 0;
    double step_scale = 0.5;   // width of the symmetric uniform proposal
    std::uint64_t seed = 0;
    Barriers barriers{};

    void validate() const;
};

struct ChainResult {
    /// Kept post-burn-in states, each sorted ascending.
    std::vector<std::vector<double>> samples;
    double acceptance_rate = 0.0;
};

/// Unnormalized log joint density:
///   -n (beta/2) sum Q(x_i) + beta sum_{i<j} log|x_i - x_j|.
/// Returns -infinity when two positions coincide exactly; rejects positions
/// outside the barriers.
double log_weight(const Polynomial& Q, const GasConfig& config,
                  const std::vector<double>& positions);

/// Single-site Metropolis over the truncated domain. Proposals falling
/// outside the barriers (or within 1e-14 of another eigenvalue) are
/// rejected, which preserves detailed balance on [sigma, tau]. Deterministic
/// for a fixed seed (std::mt19937_64).
ChainResult run_chain(const Polynomial& Q, const GasConfig& config);

/// Kolmogorov-Smirnov distance between the pooled empirical CDF of all kept
/// eigenvalue positions and cdf(m, .).
double empirical_distance(const std::vector<std::vector<double>>& samples,
                          const EquilibriumMeasure& m);

} // namespace eqm
