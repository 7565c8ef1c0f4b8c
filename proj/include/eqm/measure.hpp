#pragma once

#include "eqm/edge_solver.hpp"
#include "eqm/polycalc.hpp"
#include "eqm/polynomial.hpp"

#include <complex>
#include <vector>

namespace eqm {

/// Constrained equilibrium measure on [a,b]: density
///   (1/pi) * weight_poly(x) * edge_factor(x)
/// where the edge factor is fixed by the classification. The measure also
/// carries the cosine-series coefficients of the density under the
/// substitution x = (a+b)/2 + (b-a)/2 cos(theta); they are exact and finite
/// because the weight polynomial is a polynomial, and they back the
/// closed-form CDF, Stieltjes transform and logarithmic potential.
struct EquilibriumMeasure {
    EdgeClassification classification;
    Polynomial weight_poly;
    Polynomial potential;
    /// f_k with d mu = (1/pi) sum_k f_k cos(k theta) d theta; f_0 = mass.
    std::vector<double> cosine_series;

    double a() const { return classification.a; }
    double b() const { return classification.b; }
};

/// Edge weight (in the x variable) associated with a configuration.
WeightKind density_weight_kind(EdgeCase c);

/// Weight polynomial of the density formula for a fixed configuration and
/// support; exposed separately so closed-form checks can request a
/// configuration regardless of what classify() would choose.
Polynomial weight_polynomial(const Polynomial& Q, EdgeCase c, double a, double b);

/// Classify the barriers and assemble the measure. Fails if the resulting
/// density is not a probability density (mass 1, nonnegative).
EquilibriumMeasure build_measure(const Polynomial& Q, const Barriers& barriers);

/// Construct the measure for an already resolved classification.
EquilibriumMeasure build_measure(const Polynomial& Q, const EdgeClassification& cls);

/// Density; 0 outside the open support, +inf exactly at a hard endpoint.
double density_at(const EquilibriumMeasure& m, double x);

/// Distribution function, clamped to [0,1].
double cdf(const EquilibriumMeasure& m, double x);

/// Cauchy-Stieltjes transform G(z); rejects z within 1e-12 of the support.
std::complex<double> stieltjes(const EquilibriumMeasure& m, std::complex<double> z);

/// Logarithmic potential U(x) = integral log(1/|x-y|) d mu(y); finite
/// everywhere, exact closed form on and off the support.
double log_potential(const EquilibriumMeasure& m, double x);

/// Modified Robin constant C with U + Q/2 = C on the support. Probes the
/// midpoint and the two quartile points; fails if they disagree beyond 1e-5.
double robin_constant(const EquilibriumMeasure& m);

/// Spread of the three Robin-constant probes (internal consistency figure).
double robin_probe_spread(const EquilibriumMeasure& m);

/// Equilibrium energy C + (1/2) integral Q d mu.
double energy(const EquilibriumMeasure& m);

/// Exact mass (1/pi) integral weight_poly * edge weight over the support.
double mass(const EquilibriumMeasure& m);

} // namespace eqm
