#pragma once

// Test-only quadrature oracle, deliberately independent of the library's
// integration machinery: recursive adaptive Simpson on the substitution
// t = a + (b-a) sin^2(theta), which turns every edge weight into a smooth
// trigonometric factor.

#include "eqm/polycalc.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                               double flo, double fmid, double fhi, double whole, double tol,
                               int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = f(0.5 * (lo + mid)), rm = f(0.5 * (mid + hi));
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * lm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * rm + fhi);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, lo, mid, flo, lm, fmid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, mid, hi, fmid, rm, fhi, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double lo, double hi,
                        double tol = 1e-13) {
    // Split at irrational fractions first: trigonometric integrands sampled
    // at dyadic fractions of their period can alias and fake convergence.
    const double cuts[4] = {0.0, 0.5 - 0.5 / std::numbers::sqrt3, 1.0 / std::numbers::e, 1.0};
    double total = 0.0;
    for (int piece = 0; piece < 3; ++piece) {
        const double a = lo + (hi - lo) * cuts[piece];
        const double b = lo + (hi - lo) * cuts[piece + 1];
        const double mid = 0.5 * (a + b);
        const double fa = f(a), fmid = f(mid), fb = f(b);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fmid + fb);
        // Tolerance scaled by the crude magnitude estimate so large integrands
        // do not force full-depth recursion chasing unreachable ULPs.
        const double scaled = tol * (1.0 + std::abs(whole));
        total += adaptive_simpson(f, a, b, fa, fmid, fb, whole, scaled, 30);
    }
    return total;
}

// integral_a^b g(t) w(t) dt for the four edge weights.
inline double integrate_weighted(const std::function<double(double)>& g, double a, double b,
                                 eqm::WeightKind kind, double tol = 1e-13) {
    const double len = b - a;
    auto h = [&](double theta) {
        const double s = std::sin(theta), c = std::cos(theta);
        const double t = a + len * s * s;
        double w; // weight times dt/dtheta = 2 len s c, singularities cancelled
        switch (kind) {
            case eqm::WeightKind::Arcsine:        w = 2.0; break;
            case eqm::WeightKind::SqrtRatioRight: w = 2.0 * len * s * s; break;
            case eqm::WeightKind::SqrtRatioLeft:  w = 2.0 * len * c * c; break;
            case eqm::WeightKind::Semicircle:     w = 2.0 * len * len * s * s * c * c; break;
            default:                              w = 0.0; break;
        }
        return g(t) * w;
    };
    return integrate(h, 0.0, 0.5 * std::numbers::pi, tol);
}

} // namespace oracle
