#include "eqm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace eqm {

namespace {

double get(const Tolerances& t, const std::string& key, double fallback) {
    auto it = t.find(key);
    return it == t.end() ? fallback : it->second;
}

} // namespace

Tolerances default_tolerances() {
    return {
        {"mass_error", 1e-10},
        {"min_density", 1e-12},
        {"euler_lagrange_equality", 1e-5},
        {"euler_lagrange_inequality", 1e-8},
        {"stieltjes_decay", 1e-6},
        {"robin_spread", 1e-6},
    };
}

DiagnosticsReport run_diagnostics(const EquilibriumMeasure& m, const Tolerances& tol) {
    DiagnosticsReport r;
    const double a = m.a(), b = m.b(), len = b - a;
    const EdgeCase kind = m.classification.kind;

    r.mass_error = std::abs(mass(m) - 1.0);

    r.min_density = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i)
        r.min_density = std::min(r.min_density, density_at(m, a + len * (i + 0.5) / 1000.0));

    // Euler-Lagrange equality: -U' = Q'/2 on the support interior, probed by
    // centered differences.
    const Polynomial Qp = m.potential.derivative();
    const double h = 1e-5 * len;
    r.euler_lagrange_equality_error = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double x = a + len * (i + 0.5) / 20.0;
        const double du = (log_potential(m, x + h) - log_potential(m, x - h)) / (2.0 * h);
        r.euler_lagrange_equality_error =
            std::max(r.euler_lagrange_equality_error, std::abs(-du - 0.5 * Qp(x)));
    }

    // Euler-Lagrange inequality off the support (only where an edge is soft;
    // a hard edge sits on the barrier and has no exterior inside Sigma).
    const double C = log_potential(m, 0.5 * (a + b)) + 0.5 * m.potential(0.5 * (a + b));
    double margin = 0.0;
    const auto probe_side = [&](double from, double to) {
        for (int i = 0; i < 50; ++i) {
            const double x = from + (to - from) * (i + 1) / 50.0;
            margin = std::min(margin, 2.0 * log_potential(m, x) + m.potential(x) - 2.0 * C);
        }
    };
    if (kind == EdgeCase::SoftSoft || kind == EdgeCase::SoftHard) probe_side(a, a - 3.0);
    if (kind == EdgeCase::SoftSoft || kind == EdgeCase::HardSoft) probe_side(b, b + 3.0);
    r.euler_lagrange_inequality_margin = margin;

    const std::complex<double> z{1e8, 0.0};
    r.stieltjes_decay_error = std::abs(z * stieltjes(m, z) - 1.0);

    r.robin_spread = robin_probe_spread(m);

    r.passed = r.mass_error <= get(tol, "mass_error", 1e-10) &&
               r.min_density >= -get(tol, "min_density", 1e-12) &&
               r.euler_lagrange_equality_error <= get(tol, "euler_lagrange_equality", 1e-5) &&
               r.euler_lagrange_inequality_margin >= -get(tol, "euler_lagrange_inequality", 1e-8) &&
               r.stieltjes_decay_error <= get(tol, "stieltjes_decay", 1e-6) &&
               r.robin_spread <= get(tol, "robin_spread", 1e-6);
    return r;
}

double compare_closed_form(const EquilibriumMeasure& m,
                           const std::function<double(double)>& oracle_density,
                           int grid_size) {
    const double a = m.a(), b = m.b(), len = b - a;
    const EdgeCase kind = m.classification.kind;
    const bool hard_a = (kind == EdgeCase::HardSoft || kind == EdgeCase::HardHard);
    const bool hard_b = (kind == EdgeCase::SoftHard || kind == EdgeCase::HardHard);
    const double lo = a + (hard_a ? 0.01 * len : 0.0);
    const double hi = b - (hard_b ? 0.01 * len : 0.0);
    double sup = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / grid_size;
        sup = std::max(sup, std::abs(density_at(m, x) - oracle_density(x)));
    }
    return sup;
}

} // namespace eqm
