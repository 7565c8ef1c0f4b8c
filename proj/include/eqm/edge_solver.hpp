#pragma once

#include "eqm/polynomial.hpp"

#include <limits>
#include <utility>

namespace eqm {

/// Confinement interval [sigma, tau]; either end may be infinite.
struct Barriers {
    double sigma = -std::numeric_limits<double>::infinity();
    double tau = std::numeric_limits<double>::infinity();

    Barriers() = default;
    Barriers(double s, double t);

    bool sigma_finite() const { return std::isfinite(sigma); }
    bool tau_finite() const { return std::isfinite(tau); }
};

enum class EdgeCase { SoftSoft, HardSoft, SoftHard, HardHard };

const char* to_string(EdgeCase c);

/// Resolved support [a,b] together with the barrier configuration.
struct EdgeClassification {
    EdgeCase kind = EdgeCase::SoftSoft;
    double a = 0.0;
    double b = 0.0;
};

/// phi(a,b) = integral_a^b Q'(t) dt / sqrt((t-a)(b-t))
double phi(const Polynomial& Q, double a, double b);

/// psi(a,b) = integral_a^b Q'(t) sqrt((t-a)/(b-t)) dt - 2 pi
double psi(const Polynomial& Q, double a, double b);

/// h(a,b) = psi(a,b) / (b-a); strictly increasing in b for convex Q.
double edge_ratio(const Polynomial& Q, double a, double b);

/// Unique b(a) > a with psi(a, b(a)) = 0. Q must be convex with even
/// degree >= 2 and positive leading coefficient.
double solve_b_of_a(const Polynomial& Q, double a);

/// Mirror of solve_b_of_a: soft edge a(tau) < tau for a hard barrier at tau,
/// computed through the reflected potential Q(-x).
double solve_a_of_tau(const Polynomial& Q, double tau);

/// Free (soft-soft) edges: the unique pair with phi = psi = 0.
std::pair<double, double> solve_free_edges(const Polynomial& Q);

/// Full decision procedure resolving the edge configuration for the given
/// barriers.
EdgeClassification classify(const Polynomial& Q, const Barriers& barriers);

} // namespace eqm
