#pragma once

#include "eqm/measure.hpp"

#include <functional>
#include <map>
#include <string>

namespace eqm {

/// Quantified results of the invariant checks on a constructed measure.
struct DiagnosticsReport {
    double mass_error = 0.0;
    double min_density = 0.0; // most negative weight-polynomial based density value
    double euler_lagrange_equality_error = 0.0;   // sup over interior probes
    double euler_lagrange_inequality_margin = 0.0; // most negative off-support margin
    double stieltjes_decay_error = 0.0;
    double robin_spread = 0.0;
    bool passed = false;
};

/// Named tolerance bounds; missing keys fall back to the defaults below.
using Tolerances = std::map<std::string, double>;

/// Default bounds: mass_error 1e-10, min_density -1e-12,
/// euler_lagrange_equality 1e-5, euler_lagrange_inequality -1e-8,
/// stieltjes_decay 1e-6, robin_spread 1e-6.
Tolerances default_tolerances();

/// Run every invariant check against the given tolerances. Deterministic:
/// identical inputs produce bit-identical reports.
DiagnosticsReport run_diagnostics(const EquilibriumMeasure& m,
                                  const Tolerances& tolerances = default_tolerances());

/// Sup-norm distance between the measure's density and a closed-form oracle
/// on an interior grid; a 1% margin is excluded next to hard edges where
/// both sides diverge.
double compare_closed_form(const EquilibriumMeasure& m,
                           const std::function<double(double)>& oracle_density,
                           int grid_size);

} // namespace eqm
