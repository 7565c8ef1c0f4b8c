#include "eqm/reference_families.hpp"

#include "eqm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqm {

namespace {

constexpr double kPi = std::numbers::pi;

// First display of the edge system, rewritten as a cubic in g = sqrt(a):
//   g^3 + b g - 2 alpha / sqrt(b) = 0,
// strictly increasing in g, so the positive root is unique.
double sqrt_a_given_b(double alpha, double b) {
    const double rhs = 2.0 * alpha / std::sqrt(b);
    double lo = 0.0, hi = 1.0;
    while (hi * hi * hi + b * hi < rhs) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mid * mid * mid + b * mid < rhs ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double second_residual(double alpha, double b) {
    const double g = sqrt_a_given_b(alpha, b);
    const double a = g * g;
    return 0.75 * (b - a) * (b - a) + a * (b - a) + 2.0 * alpha * g / std::sqrt(b) -
           2.0 * alpha - 2.0;
}

// Unnormalized soft-soft density sqrt((b-x)(x-a)) (1 + alpha/(sqrt(ab) x)).
double logpot_soft_unnormalized(double alpha, double a, double b, double x) {
    if (x <= a || x >= b) return 0.0;
    return std::sqrt((b - x) * (x - a)) * (1.0 + alpha / (std::sqrt(a * b) * x));
}

double logpot_hard_mass(double alpha, double sigma, double b) {
    const double c2 = alpha == 0.0 ? 0.0 : 2.0 * alpha * std::sqrt(sigma / b);
    auto g = [&](double x) {
        double v = 2.0 * x + b - sigma;
        if (c2 != 0.0) v -= c2 / x;
        return v;
    };
    return integrate_edge_weighted(g, sigma, b, /*hard_left=*/true, /*hard_right=*/false) /
           (2.0 * kPi);
}

} // namespace

double gauss_b_of_sigma(double sigma) {
    return (2.0 / 3.0) * (0.5 * sigma + std::sqrt(sigma * sigma + 6.0));
}

double gauss_hard_hard_density(double sigma, double tau, double x) {
    if (!(x > sigma && x < tau))
        throw std::invalid_argument("gauss_hard_hard_density: x outside (sigma, tau)");
    const double num = (sigma - tau) * (sigma - tau) / 8.0 + 1.0 +
                       x * (sigma + tau) / 2.0 - x * x;
    return num / (kPi * std::sqrt((tau - x) * (x - sigma)));
}

std::pair<double, double> solve_logpot_soft_edges(double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("solve_logpot_soft_edges: alpha > 0 required");

    // With the inner sqrt(a) solve substituted in, the residual in b is
    // positive at both extremes and dips negative in between, crossing zero
    // twice; the physical solution (the one with a < b) is the upper root,
    // so bracket it by walking down from a positive right end.
    double hi = 2.0 + 2.0 * alpha;
    int it = 0;
    while (second_residual(alpha, hi) < 0.0) {
        hi *= 2.0;
        if (++it > 200) throw std::runtime_error("solve_logpot_soft_edges: no upper bracket");
    }
    double lo = 0.5 * hi;
    while (second_residual(alpha, lo) > 0.0) {
        lo *= 0.5;
        if (++it > 200) throw std::runtime_error("solve_logpot_soft_edges: no lower bracket");
    }
    double flo = second_residual(alpha, lo), fhi = second_residual(alpha, hi);
    for (int k = 0; k < 200 && hi - lo > 1e-16 * (1.0 + hi); ++k) {
        double mid = (fhi != flo) ? lo - flo * (hi - lo) / (fhi - flo) : 0.5 * (lo + hi);
        const double margin = 0.01 * (hi - lo);
        if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
        const double fm = second_residual(alpha, mid);
        if ((fm < 0.0) == (flo < 0.0)) { lo = mid; flo = fm; }
        else { hi = mid; fhi = fm; }
    }
    const double b = 0.5 * (lo + hi);
    const double g = sqrt_a_given_b(alpha, b);
    const double a = g * g;

    const double r1 = b + a - 2.0 * alpha / std::sqrt(a * b);
    const double r2 = 0.75 * (b - a) * (b - a) + a * (b - a) +
                      2.0 * alpha * std::sqrt(a / b) - 2.0 * alpha - 2.0;
    if (std::abs(r1) > 1e-10 || std::abs(r2) > 1e-10)
        throw std::runtime_error("solve_logpot_soft_edges: residual tolerance not met");
    return {a, b};
}

double logpot_soft_density(double alpha, double x) {
    if (x <= 0.0) throw std::invalid_argument("logpot_soft_density: x > 0 required");
    const auto [a, b] = solve_logpot_soft_edges(alpha);
    if (x <= a || x >= b) return 0.0;
    const double z = integrate_edge_weighted(
        [&](double t) { return 1.0 + alpha / (std::sqrt(a * b) * t); }, a, b,
        /*hard_left=*/false, /*hard_right=*/false);
    return logpot_soft_unnormalized(alpha, a, b, x) / z;
}

double solve_logpot_hard_edge(double alpha, double sigma) {
    // sigma < 0 only makes sense without the log term.
    if (alpha < 0.0 || (sigma < 0.0 && alpha != 0.0))
        throw std::invalid_argument("solve_logpot_hard_edge: alpha, sigma >= 0 required");
    double lo = sigma + 1e-6, hi = sigma + 2.0;
    int it = 0;
    while (logpot_hard_mass(alpha, sigma, hi) < 1.0) {
        hi = sigma + 2.0 * (hi - sigma);
        if (++it > 200) throw std::runtime_error("solve_logpot_hard_edge: no upper bracket");
    }
    while (logpot_hard_mass(alpha, sigma, lo) > 1.0) {
        lo = sigma + 0.5 * (lo - sigma);
        if (++it > 200) throw std::runtime_error("solve_logpot_hard_edge: no lower bracket");
    }
    for (int k = 0; k < 200 && hi - lo > 1e-15 * (1.0 + hi); ++k) {
        const double mid = 0.5 * (lo + hi);
        (logpot_hard_mass(alpha, sigma, mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double logpot_hard_density(double alpha, double sigma, double x) {
    const double b = solve_logpot_hard_edge(alpha, sigma);
    if (x <= sigma || x >= b) return 0.0;
    const double c2 = alpha == 0.0 ? 0.0 : 2.0 * alpha * std::sqrt(sigma / b);
    double v = 2.0 * x + b - sigma;
    if (c2 != 0.0) v -= c2 / x;
    return std::sqrt((b - x) / (x - sigma)) * v / (2.0 * kPi);
}

} // namespace eqm
