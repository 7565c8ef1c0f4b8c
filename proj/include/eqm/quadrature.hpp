#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqm {

/// Composite Simpson on [a,b], panel count doubled until two successive
/// estimates agree to tol (absolute + relative); for smooth integrands only.
template <typename F>
double simpson_doubling(F f, double a, double b, double tol = 1e-12,
                        int max_panels = 1 << 16) {
    int n = 64;
    auto run = [&](int panels) {
        const double h = (b - a) / panels;
        double acc = f(a) + f(b);
        for (int i = 1; i < panels; ++i)
            acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
        return acc * h / 3.0;
    };
    double prev = run(n);
    while (n < max_panels) {
        n *= 2;
        const double cur = run(n);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

/// Integral over [a,b] of g against the edge weight selected by the two
/// flags, via the substitution x = c + R cos(theta) which absorbs the
/// square-root edge behavior:
///   hard_left  && !hard_right : weight sqrt((b-x)/(x-a))
///   !hard_left && hard_right  : weight sqrt((x-a)/(b-x))
///   !hard_left && !hard_right : weight sqrt((x-a)(b-x))
///   hard_left  && hard_right  : weight 1/sqrt((x-a)(b-x))
/// g itself must be smooth on [a,b].
template <typename F>
double integrate_edge_weighted(F g, double a, double b, bool hard_left, bool hard_right,
                               double tol = 1e-12) {
    const double c = 0.5 * (a + b), R = 0.5 * (b - a);
    auto integrand = [&](double theta) {
        const double x = c + R * std::cos(theta);
        double s;
        if (hard_left && hard_right) s = 1.0;
        else if (hard_left) s = R * (1.0 - std::cos(theta));
        else if (hard_right) s = R * (1.0 + std::cos(theta));
        else s = R * R * std::sin(theta) * std::sin(theta);
        return g(x) * s;
    };
    return simpson_doubling(integrand, 0.0, std::numbers::pi, tol);
}

} // namespace eqm
