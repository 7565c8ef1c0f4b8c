#include "eqm/polycalc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace eqm {

namespace {

constexpr double kPi = std::numbers::pi;

// Moments of the four weights on [0,1] are Beta-function values; the ratio
// m_{k+1}/m_k is a rational number, so the sequence is generated by a stable
// recurrence from m_0 instead of factorial quotients.
double moment_start(WeightKind kind) {
    switch (kind) {
        case WeightKind::Arcsine:        return kPi;        // B(1/2,1/2)
        case WeightKind::SqrtRatioRight: return kPi / 2.0;  // B(3/2,1/2)
        case WeightKind::SqrtRatioLeft:  return kPi / 2.0;  // B(1/2,3/2)
        case WeightKind::Semicircle:     return kPi / 8.0;  // B(3/2,3/2)
    }
    throw std::logic_error("unreachable");
}

double moment_ratio(WeightKind kind, int k) {
    switch (kind) {
        case WeightKind::Arcsine:        return (2.0 * k + 1) / (2.0 * k + 2);
        case WeightKind::SqrtRatioRight: return (2.0 * k + 3) / (2.0 * k + 4);
        case WeightKind::SqrtRatioLeft:  return (2.0 * k + 1) / (2.0 * k + 4);
        case WeightKind::Semicircle:     return (2.0 * k + 3) / (2.0 * k + 6);
    }
    throw std::logic_error("unreachable");
}

double interval_scale(WeightKind kind, double len) {
    switch (kind) {
        case WeightKind::Arcsine:        return 1.0;
        case WeightKind::SqrtRatioRight:
        case WeightKind::SqrtRatioLeft:  return len;
        case WeightKind::Semicircle:     return len * len;
    }
    throw std::logic_error("unreachable");
}

} // namespace

double BivariateKernel::eval(double x, double t) const {
    double acc = 0.0;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        acc = acc * t + (*it)(x);
    return acc;
}

Polynomial derivative(const Polynomial& p) { return p.derivative(); }

BivariateKernel divided_difference(const Polynomial& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("divided_difference: degree >= 1 required");
    const auto& c = p.coeffs();
    const size_t n = c.size(); // degree n-1
    // (x^j - t^j)/(x - t) = sum_{i=0}^{j-1} x^{j-1-i} t^i
    BivariateKernel K;
    K.rows.resize(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        std::vector<double> row(n - 1 - i, 0.0);
        for (size_t j = i + 1; j < n; ++j)
            row[j - 1 - i] = c[j];
        K.rows[i] = Polynomial(std::move(row));
    }
    return K;
}

double weighted_moment(WeightKind kind, int k) {
    if (k < 0) throw std::invalid_argument("weighted_moment: k >= 0 required");
    double m = moment_start(kind);
    for (int j = 0; j < k; ++j) m *= moment_ratio(kind, j);
    return m;
}

double integrate_weighted(const Polynomial& p, double a, double b, WeightKind kind) {
    if (!(a < b)) throw std::invalid_argument("integrate_weighted: a < b required");
    if (p.is_zero()) return 0.0;
    // t = a + (b-a)u maps the weight onto its [0,1] reference form up to a
    // power of (b-a).
    const Polynomial q = p.compose_affine(a, b - a);
    double acc = 0.0;
    double m = moment_start(kind);
    const auto& c = q.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        acc += c[k] * m;
        m *= moment_ratio(kind, static_cast<int>(k));
    }
    return acc * interval_scale(kind, b - a);
}

} // namespace eqm
