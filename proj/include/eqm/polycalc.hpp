#pragma once

#include "eqm/polynomial.hpp"

namespace eqm {

/// The four edge weights on a support interval [a,b], named by shape:
///   Arcsine        1/sqrt((t-a)(b-t))
///   SqrtRatioRight sqrt((t-a)/(b-t))
///   SqrtRatioLeft  sqrt((b-t)/(t-a))
///   Semicircle     sqrt((t-a)(b-t))
enum class WeightKind { Arcsine, SqrtRatioRight, SqrtRatioLeft, Semicircle };

/// Two-variable kernel (p(x)-p(t))/(x-t) stored as polynomials in x indexed
/// by the power of t.
struct BivariateKernel {
    std::vector<Polynomial> rows; // rows[j] multiplies t^j

    double eval(double x, double t) const;
    /// Total degree, deg(p) - 1.
    int total_degree() const { return static_cast<int>(rows.size()) - 1; }
};

Polynomial derivative(const Polynomial& p);

/// Expansion of (p(x)-p(t))/(x-t); requires deg(p) >= 1.
BivariateKernel divided_difference(const Polynomial& p);

/// k-th moment of the weight on the reference interval [0,1]:
/// integral_0^1 t^k w(t) dt, in closed form via Beta-function ratios.
double weighted_moment(WeightKind kind, int k);

/// Exact integral_a^b p(t) w(t) dt by affine reduction to [0,1] moments.
double integrate_weighted(const Polynomial& p, double a, double b, WeightKind kind);

} // namespace eqm
