#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace eqm {

/// Dense univariate polynomial with real coefficients in ascending degree
/// order. The zero polynomial has an empty coefficient vector; otherwise the
/// trailing coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs)
        : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<double> coeffs)
        : coeffs_(std::move(coeffs)) { trim(); }

    /// c * x^k
    static Polynomial monomial(int k, double c = 1.0);

    const std::vector<double>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    /// Horner evaluation.
    double operator()(double x) const;
    std::complex<double> operator()(std::complex<double> z) const;

    Polynomial derivative() const;

    /// p(c0 + c1*x)
    Polynomial compose_affine(double c0, double c1) const;
    /// p(-x)
    Polynomial reflect() const { return compose_affine(0.0, -1.0); }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(double s) const;
    Polynomial operator+(double s) const { return *this + Polynomial{s}; }
    Polynomial operator-(double s) const { return *this - Polynomial{s}; }

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    void trim();
    std::vector<double> coeffs_;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

} // namespace eqm
