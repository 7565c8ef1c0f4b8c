#include "eqm/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace eqm {

namespace {

constexpr double kPi = std::numbers::pi;

// ---- Chebyshev/cosine series helpers -------------------------------------
// A series {c_k} stands for sum_k c_k T_k(y) = sum_k c_k cos(k theta) with
// y = cos(theta).

std::vector<double> cheb_mul_y(const std::vector<double>& c) {
    if (c.empty()) return {};
    std::vector<double> out(c.size() + 1, 0.0);
    out[1] += c[0]; // y*T_0 = T_1
    for (size_t k = 1; k < c.size(); ++k) {
        out[k + 1] += 0.5 * c[k];
        out[k - 1] += 0.5 * c[k];
    }
    return out;
}

std::vector<double> poly_to_cheb(const Polynomial& p) {
    std::vector<double> s;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        s = cheb_mul_y(s);
        if (s.empty()) s.resize(1, 0.0);
        s[0] += *it;
    }
    return s;
}

std::vector<double> cheb_mul(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.empty() || v.empty()) return {};
    std::vector<double> out(u.size() + v.size() - 1, 0.0);
    for (size_t m = 0; m < u.size(); ++m)
        for (size_t n = 0; n < v.size(); ++n) {
            out[m + n] += 0.5 * u[m] * v[n];
            out[m > n ? m - n : n - m] += 0.5 * u[m] * v[n];
        }
    return out;
}

// d mu = (1/pi) wp(t) * edge(t) dt; under t = c + R cos(theta) the combined
// factor edge(t)*|dt/dtheta| is a short cosine polynomial per configuration.
std::vector<double> edge_factor_series(EdgeCase c, double R) {
    switch (c) {
        case EdgeCase::SoftSoft:  return {R * R / 2.0, 0.0, -R * R / 2.0}; // (R sin)^2
        case EdgeCase::HardSoft:  return {R, -R};                          // R(1-cos)
        case EdgeCase::SoftHard:  return {R, R};                           // R(1+cos)
        case EdgeCase::HardHard:  return {1.0};
    }
    throw std::logic_error("unreachable");
}

// w with |w|>1 such that x = c + (R/2)(w + 1/w), for real x off [a,b].
double joukowski_outer(double u) {
    const double s = std::sqrt(u * u - 1.0);
    return u > 0 ? u + s : u - s;
}

double support_midpoint(const EquilibriumMeasure& m) { return 0.5 * (m.a() + m.b()); }
double support_radius(const EquilibriumMeasure& m) { return 0.5 * (m.b() - m.a()); }

double robin_probe(const EquilibriumMeasure& m, double x) {
    return log_potential(m, x) + 0.5 * m.potential(x);
}

} // namespace

WeightKind density_weight_kind(EdgeCase c) {
    switch (c) {
        case EdgeCase::SoftSoft:  return WeightKind::Semicircle;
        case EdgeCase::HardSoft:  return WeightKind::SqrtRatioLeft;
        case EdgeCase::SoftHard:  return WeightKind::SqrtRatioRight;
        case EdgeCase::HardHard:  return WeightKind::Arcsine;
    }
    throw std::logic_error("unreachable");
}

Polynomial weight_polynomial(const Polynomial& Q, EdgeCase c, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("weight_polynomial: a < b required");
    const Polynomial Qp = Q.derivative();
    const BivariateKernel K = divided_difference(Qp);

    // Kernel integration weight in the t variable is the reciprocal-shape
    // counterpart of the density's edge factor.
    WeightKind t_kind;
    switch (c) {
        case EdgeCase::SoftSoft:  t_kind = WeightKind::Arcsine; break;
        case EdgeCase::HardSoft:  t_kind = WeightKind::SqrtRatioRight; break;
        case EdgeCase::SoftHard:  t_kind = WeightKind::SqrtRatioLeft; break;
        case EdgeCase::HardHard:  t_kind = WeightKind::Semicircle; break;
        default: throw std::logic_error("unreachable");
    }

    Polynomial acc;
    for (size_t j = 0; j < K.rows.size(); ++j)
        acc = acc + K.rows[j] * integrate_weighted(Polynomial::monomial(static_cast<int>(j)),
                                                   a, b, t_kind);
    acc = acc * (1.0 / (2.0 * kPi));

    switch (c) {
        case EdgeCase::SoftSoft:
            return acc;
        case EdgeCase::HardSoft:
            return acc + Qp * 0.5;
        case EdgeCase::SoftHard:
            return acc - Qp * 0.5;
        case EdgeCase::HardHard:
            return acc + Polynomial{0.5 * (a + b), -1.0} * Qp * 0.5 + Polynomial{1.0};
    }
    throw std::logic_error("unreachable");
}

EquilibriumMeasure build_measure(const Polynomial& Q, const EdgeClassification& cls) {
    EquilibriumMeasure m;
    m.classification = cls;
    m.potential = Q;
    m.weight_poly = weight_polynomial(Q, cls.kind, cls.a, cls.b);

    // Resolve the overall sign by the sign of the mass; positivity is checked
    // afterwards either way.
    double total = mass(m);
    if (total < 0.0) {
        m.weight_poly = m.weight_poly * -1.0;
        total = -total;
    }
    if (std::abs(total - 1.0) > 1e-8)
        throw std::runtime_error("build_measure: density mass deviates from 1");

    const double c = 0.5 * (cls.a + cls.b), R = 0.5 * (cls.b - cls.a);
    m.cosine_series = cheb_mul(poly_to_cheb(m.weight_poly.compose_affine(c, R)),
                               edge_factor_series(cls.kind, R));

    // Positivity of the weight polynomial on the closed support.
    double max_abs = 0.0;
    for (int i = 0; i <= 1000; ++i)
        max_abs = std::max(max_abs, std::abs(m.weight_poly(cls.a + (cls.b - cls.a) * i / 1000.0)));
    for (int i = 0; i <= 1000; ++i) {
        const double x = cls.a + (cls.b - cls.a) * i / 1000.0;
        if (m.weight_poly(x) < -1e-10 * max_abs)
            throw std::runtime_error("build_measure: density negative on the support");
    }
    return m;
}

EquilibriumMeasure build_measure(const Polynomial& Q, const Barriers& barriers) {
    return build_measure(Q, classify(Q, barriers));
}

double mass(const EquilibriumMeasure& m) {
    return integrate_weighted(m.weight_poly, m.a(), m.b(),
                              density_weight_kind(m.classification.kind)) / kPi;
}

double density_at(const EquilibriumMeasure& m, double x) {
    const double a = m.a(), b = m.b();
    if (x < a || x > b) return 0.0;
    const EdgeCase c = m.classification.kind;
    const bool hard_a = (c == EdgeCase::HardSoft || c == EdgeCase::HardHard);
    const bool hard_b = (c == EdgeCase::SoftHard || c == EdgeCase::HardHard);
    if ((x == a && hard_a) || (x == b && hard_b))
        return std::numeric_limits<double>::infinity();
    if (x == a || x == b) return 0.0;

    double factor;
    switch (c) {
        case EdgeCase::SoftSoft:  factor = std::sqrt((x - a) * (b - x)); break;
        case EdgeCase::HardSoft:  factor = std::sqrt((b - x) / (x - a)); break;
        case EdgeCase::SoftHard:  factor = std::sqrt((x - a) / (b - x)); break;
        case EdgeCase::HardHard:  factor = 1.0 / std::sqrt((x - a) * (b - x)); break;
        default: throw std::logic_error("unreachable");
    }
    return m.weight_poly(x) * factor / kPi;
}

double cdf(const EquilibriumMeasure& m, double x) {
    if (x <= m.a()) return 0.0;
    if (x >= m.b()) return 1.0;
    const double c = support_midpoint(m), R = support_radius(m);
    const double theta = std::acos(std::clamp((x - c) / R, -1.0, 1.0));
    const auto& f = m.cosine_series;
    double acc = f.empty() ? 0.0 : f[0] * (kPi - theta);
    for (size_t k = 1; k < f.size(); ++k)
        acc -= f[k] * std::sin(k * theta) / static_cast<double>(k);
    return std::clamp(acc / kPi, 0.0, 1.0);
}

std::complex<double> stieltjes(const EquilibriumMeasure& m, std::complex<double> z) {
    const double a = m.a(), b = m.b();
    const double dx = std::max({a - z.real(), z.real() - b, 0.0});
    if (std::hypot(dx, z.imag()) <= 1e-12)
        throw std::invalid_argument("stieltjes: z too close to the support");

    const double c = support_midpoint(m), R = support_radius(m);
    const std::complex<double> u = (z - c) / R;
    const std::complex<double> s = std::sqrt(u - 1.0) * std::sqrt(u + 1.0);
    const std::complex<double> v = 1.0 / (u + s); // |v| < 1
    const auto& f = m.cosine_series;
    std::complex<double> acc = 0.0, vk = 1.0;
    for (size_t k = 0; k < f.size(); ++k) {
        acc += f[k] * vk;
        vk *= v;
    }
    return acc / (R * s);
}

double log_potential(const EquilibriumMeasure& m, double x) {
    const double a = m.a(), b = m.b();
    const double c = support_midpoint(m), R = support_radius(m);
    const auto& f = m.cosine_series;
    if (x >= a && x <= b) {
        const double alpha = std::acos(std::clamp((x - c) / R, -1.0, 1.0));
        double acc = -std::log(0.5 * R);
        for (size_t k = 1; k < f.size(); ++k)
            acc += f[k] * std::cos(k * alpha) / static_cast<double>(k);
        return acc;
    }
    const double w = joukowski_outer((x - c) / R);
    double acc = -std::log(0.5 * R * std::abs(w));
    double wk = w;
    for (size_t k = 1; k < f.size(); ++k) {
        acc += f[k] / (static_cast<double>(k) * wk);
        wk *= w;
    }
    return acc;
}

double robin_probe_spread(const EquilibriumMeasure& m) {
    const double len = m.b() - m.a();
    const double c0 = robin_probe(m, m.a() + 0.25 * len);
    const double c1 = robin_probe(m, m.a() + 0.50 * len);
    const double c2 = robin_probe(m, m.a() + 0.75 * len);
    return std::max({c0, c1, c2}) - std::min({c0, c1, c2});
}

double robin_constant(const EquilibriumMeasure& m) {
    if (robin_probe_spread(m) > 1e-5)
        throw std::runtime_error("robin_constant: probe points disagree; measure is inconsistent");
    return robin_probe(m, support_midpoint(m));
}

double energy(const EquilibriumMeasure& m) {
    const double q_moment = integrate_weighted(m.potential * m.weight_poly, m.a(), m.b(),
                                               density_weight_kind(m.classification.kind)) / kPi;
    return robin_constant(m) + 0.5 * q_moment;
}

} // namespace eqm
