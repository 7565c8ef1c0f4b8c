#pragma once

#include <utility>

namespace eqm {

/// Gaussian potential Q = x^2: soft-edge location b(sigma) above a hard
/// barrier at sigma, in closed form. Valid for sigma >= -sqrt(2).
double gauss_b_of_sigma(double sigma);

/// Gaussian hard-hard density on (sigma, tau) for -sqrt2 <= sigma < tau <= sqrt2.
double gauss_hard_hard_density(double sigma, double tau, double x);

/// Potential x^2 - 2 alpha log x on the positive half line: the free
/// (soft-soft) support endpoints 0 < a_c < b_c solving
///   b + a - 2 alpha / sqrt(ab) = 0
///   (3/4)(b-a)^2 + a(b-a) + 2 alpha sqrt(a/b) - 2 alpha - 2 = 0.
std::pair<double, double> solve_logpot_soft_edges(double alpha);

/// Soft-soft density of the log-potential family, normalized to unit mass.
double logpot_soft_density(double alpha, double x);

/// Hard edge at a = sigma, soft edge at b fixed by the unit-mass condition:
///   f(x) = (1/2pi) sqrt((b-x)/(x-a)) (2x + b - a - 2 alpha sqrt(a/b)/x).
double logpot_hard_density(double alpha, double sigma, double x);

/// Soft edge b for the hard-edge family above (exposed for tests/CLI).
double solve_logpot_hard_edge(double alpha, double sigma);

} // namespace eqm
