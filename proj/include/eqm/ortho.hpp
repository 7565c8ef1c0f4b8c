#pragma once

#include <vector>

namespace eqm {

/// Monic orthogonal polynomials for the weight x^{2 mu} e^{-x^2} on the
/// positive half line, held as a three-term recurrence
///   p_{k+1}(x) = (x - alpha_k) p_k(x) - beta_k p_{k-1}(x)
/// with squared norms d_k = integral p_k^2 w. Basis size is capped at 16;
/// the Hankel moment matrix becomes too ill-conditioned beyond that.
struct OrthoBasis {
    double mu = 0.0;
    int n = 0;
    std::vector<double> alpha; // size n
    std::vector<double> beta;  // size n-1, beta[k-1] multiplies p_{k-1}
    std::vector<double> norms; // d_0..d_{n-1}

    /// p_0(x), ..., p_{n-1}(x) by the recurrence.
    std::vector<double> eval_all(double x) const;
};

/// integral_0^inf x^{j + 2 mu} e^{-x^2} dx = Gamma((j + 2 mu + 1)/2) / 2.
double half_line_moment(double mu, int j);

/// Recurrence coefficients from the Cholesky factor of the Hankel moment
/// matrix, accumulated in extended precision. 1 <= n <= 16.
OrthoBasis build_basis(double mu, int n);

/// Finite-n Christoffel-type density
///   f_n(x) = (1/sqrt n) sum_{k<n} phi_k(sqrt n x)^2,
/// phi_k(y) = p_k(y) y^mu e^{-y^2/2} / sqrt(d_k); x >= 0 required.
double fn_density(const OrthoBasis& basis, double x);

} // namespace eqm
