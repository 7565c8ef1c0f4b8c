#include "eqm/ortho.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace eqm {

double half_line_moment(double mu, int j) {
    if (j < 0 || mu < 0.0)
        throw std::invalid_argument("half_line_moment: j >= 0 and mu >= 0 required");
    return 0.5 * std::tgamma(0.5 * (j + 2.0 * mu + 1.0));
}

OrthoBasis build_basis(double mu, int n) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("build_basis: 1 <= n <= 16 required");
    if (mu < 0.0) throw std::invalid_argument("build_basis: mu >= 0 required");

    // Hankel moment matrix H[i][j] = m_{i+j}, factored H = R^T R in long
    // double; the recurrence coefficients read off the factor directly.
    const int dim = n + 1;
    std::vector<long double> moments(2 * dim - 1);
    for (int j = 0; j < 2 * dim - 1; ++j)
        moments[j] = 0.5L * std::tgammal(0.5L * (j + 2.0L * mu + 1.0L));

    std::vector<std::vector<long double>> R(dim, std::vector<long double>(dim, 0.0L));
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            long double s = moments[i + j];
            for (int k = 0; k < i; ++k) s -= R[k][i] * R[k][j];
            if (i == j) {
                if (s <= 0.0L)
                    throw std::runtime_error("build_basis: moment matrix not positive definite");
                R[i][i] = std::sqrt(s);
            } else {
                R[i][j] = s / R[i][i];
            }
        }
    }

    OrthoBasis basis;
    basis.mu = mu;
    basis.n = n;
    for (int k = 0; k < n; ++k) {
        long double a = R[k][k + 1] / R[k][k];
        if (k > 0) {
            a -= R[k - 1][k] / R[k - 1][k - 1];
            const long double ratio = R[k][k] / R[k - 1][k - 1];
            const long double beta = ratio * ratio;
            if (beta <= 0.0L)
                throw std::runtime_error("build_basis: recurrence breakdown");
            basis.beta.push_back(static_cast<double>(beta));
        }
        basis.alpha.push_back(static_cast<double>(a));
        basis.norms.push_back(static_cast<double>(R[k][k] * R[k][k]));
    }
    return basis;
}

std::vector<double> OrthoBasis::eval_all(double x) const {
    std::vector<double> p(static_cast<size_t>(n));
    double prev = 0.0, cur = 1.0;
    for (int k = 0; k < n; ++k) {
        p[static_cast<size_t>(k)] = cur;
        const double next = (x - alpha[static_cast<size_t>(k)]) * cur -
                            (k > 0 ? beta[static_cast<size_t>(k - 1)] * prev : 0.0);
        prev = cur;
        cur = next;
    }
    return p;
}

double fn_density(const OrthoBasis& basis, double x) {
    if (x < 0.0) throw std::invalid_argument("fn_density: x >= 0 required");
    const double y = std::sqrt(static_cast<double>(basis.n)) * x;
    const std::vector<double> p = basis.eval_all(y);
    // y^{2mu} e^{-y^2}; at y = 0 the weight is 1 for mu = 0 and 0 otherwise.
    const double w = (y == 0.0) ? (basis.mu == 0.0 ? 1.0 : 0.0)
                                : std::pow(y, 2.0 * basis.mu) * std::exp(-y * y);
    double s = 0.0;
    for (int k = 0; k < basis.n; ++k)
        s += p[static_cast<size_t>(k)] * p[static_cast<size_t>(k)] /
             basis.norms[static_cast<size_t>(k)];
    return s * w / std::sqrt(static_cast<double>(basis.n));
}

} // namespace eqm
