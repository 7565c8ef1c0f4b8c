#include "eqm/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace eqm {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0)
        coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int k, double c) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<double> v(static_cast<size_t>(k) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v));
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_affine(double c0, double c1) const {
    // Horner in the affine argument.
    Polynomial acc{};
    const Polynomial arg{c0, c1};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + Polynomial{*it};
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<double> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) v[k] += rhs.coeffs_[k];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + rhs * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial{};
    std::vector<double> v(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> v = coeffs_;
    for (double& c : v) c *= s;
    return Polynomial(std::move(v));
}

} // namespace eqm
