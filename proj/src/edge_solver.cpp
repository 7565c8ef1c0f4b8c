#include "eqm/edge_solver.hpp"

#include "eqm/polycalc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxDoublings = 60;

void check_interval(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("edge functions require a < b");
}

void check_potential(const Polynomial& Q) {
    if (Q.degree() < 2 || Q.degree() % 2 != 0 || Q.leading() <= 0.0)
        throw std::invalid_argument(
            "potential must have even degree >= 2 and positive leading coefficient");
}

// Bisection refined by secant steps on a bracketed monotone function.
template <typename F>
double bisect_secant(F f, double lo, double hi, double flo, double fhi) {
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        double mid;
        // Secant proposal, safeguarded to the interior of the bracket.
        if (fhi != flo) {
            mid = lo - flo * (hi - lo) / (fhi - flo);
            const double margin = 0.01 * (hi - lo);
            if (!(mid > lo + margin && mid < hi - margin))
                mid = 0.5 * (lo + hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

Barriers::Barriers(double s, double t) : sigma(s), tau(t) {
    if (!(sigma < tau)) throw std::invalid_argument("barriers require sigma < tau");
    if (std::isnan(sigma) || std::isnan(tau))
        throw std::invalid_argument("barriers must not be NaN");
}

const char* to_string(EdgeCase c) {
    switch (c) {
        case EdgeCase::SoftSoft: return "SoftSoft";
        case EdgeCase::HardSoft: return "HardSoft";
        case EdgeCase::SoftHard: return "SoftHard";
        case EdgeCase::HardHard: return "HardHard";
    }
    return "?";
}

double phi(const Polynomial& Q, double a, double b) {
    check_interval(a, b);
    return integrate_weighted(Q.derivative(), a, b, WeightKind::Arcsine);
}

double psi(const Polynomial& Q, double a, double b) {
    check_interval(a, b);
    return integrate_weighted(Q.derivative(), a, b, WeightKind::SqrtRatioRight) - kTwoPi;
}

double edge_ratio(const Polynomial& Q, double a, double b) {
    check_interval(a, b);
    return psi(Q, a, b) / (b - a);
}

double solve_b_of_a(const Polynomial& Q, double a) {
    check_potential(Q);
    // h(a,.) increases strictly from -inf (b -> a+) to +inf (b -> inf), so a
    // sign change brackets the unique root.
    const auto h = [&](double b) { return edge_ratio(Q, a, b); };

    double lo = a + 1.0, hi = a + 1.0;
    double flo = h(lo), fhi = flo;
    if (flo < 0.0) {
        double width = 1.0;
        int it = 0;
        do {
            if (++it > kMaxDoublings)
                throw std::runtime_error("solve_b_of_a: no sign change while expanding");
            width *= 2.0;
            hi = a + width;
            fhi = h(hi);
        } while (fhi < 0.0);
    } else {
        double width = 1.0;
        int it = 0;
        do {
            if (++it > kMaxDoublings)
                throw std::runtime_error("solve_b_of_a: no sign change while shrinking");
            width *= 0.5;
            lo = a + width;
            flo = h(lo);
        } while (flo > 0.0);
    }

    const double b = bisect_secant(h, lo, hi, flo, fhi);
    if (std::abs(psi(Q, a, b)) > 1e-12 * (1.0 + std::abs(a)))
        throw std::runtime_error("solve_b_of_a: residual tolerance not met");
    return b;
}

double solve_a_of_tau(const Polynomial& Q, double tau) {
    return -solve_b_of_a(Q.reflect(), -tau);
}

std::pair<double, double> solve_free_edges(const Polynomial& Q) {
    check_potential(Q);
    // g(a) = phi(a, b(a)) crosses zero exactly once; negative for a far left,
    // positive for a far right.
    const auto g = [&](double a) { return phi(Q, a, solve_b_of_a(Q, a)); };

    double lo = 0.0, hi = 0.0;
    double flo = g(0.0), fhi = flo;
    double step = 1.0;
    if (flo > 0.0) {
        int it = 0;
        do {
            if (++it > kMaxDoublings)
                throw std::runtime_error("solve_free_edges: bracketing failed (down)");
            lo -= step;
            step *= 2.0;
            flo = g(lo);
        } while (flo > 0.0);
        hi = lo + step / 2.0; // previous probe
        fhi = g(hi);
    } else {
        int it = 0;
        do {
            if (++it > kMaxDoublings)
                throw std::runtime_error("solve_free_edges: bracketing failed (up)");
            hi += step;
            step *= 2.0;
            fhi = g(hi);
        } while (fhi < 0.0);
        lo = hi - step / 2.0;
        flo = g(lo);
    }

    const double a0 = bisect_secant(g, lo, hi, flo, fhi);
    const double b0 = solve_b_of_a(Q, a0);
    if (std::abs(phi(Q, a0, b0)) > 1e-10 || std::abs(psi(Q, a0, b0)) > 1e-10)
        throw std::runtime_error("solve_free_edges: residual tolerance not met");
    return {a0, b0};
}

EdgeClassification classify(const Polynomial& Q, const Barriers& barriers) {
    const auto [a0, b0] = solve_free_edges(Q);
    const double sigma = barriers.sigma, tau = barriers.tau;

    if (sigma <= a0 && tau >= b0)
        return {EdgeCase::SoftSoft, a0, b0};

    if (sigma > a0) {
        const double b_sigma = solve_b_of_a(Q, sigma);
        if (tau >= b_sigma)
            return {EdgeCase::HardSoft, sigma, b_sigma};
        return {EdgeCase::HardHard, sigma, tau};
    }

    // sigma <= a0, tau < b0
    const double a_tau = solve_a_of_tau(Q, tau);
    if (sigma <= a_tau)
        return {EdgeCase::SoftHard, a_tau, tau};
    return {EdgeCase::HardHard, sigma, tau};
}

} // namespace eqm
