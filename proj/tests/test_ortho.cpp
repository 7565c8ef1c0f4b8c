#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqm/ortho.hpp"
#include "eqm/reference_families.hpp"
#include "oracle.hpp"

#include <cmath>
#include <numbers>
#include <tuple>
#include <utility>
#include <vector>

namespace {
constexpr double kPi = std::numbers::pi;

// Half-line weight x^{2mu} e^{-x^2}; quadrature cut at x = 12 (tail < 1e-60).
double weighted_inner(const eqm::OrthoBasis& basis, int j, int k) {
    return oracle::integrate(
        [&](double x) {
            const auto p = basis.eval_all(x);
            const double w = x == 0.0 ? (basis.mu == 0.0 ? 1.0 : 0.0)
                                      : std::pow(x, 2.0 * basis.mu) * std::exp(-x * x);
            return p[static_cast<size_t>(j)] * p[static_cast<size_t>(k)] * w;
        },
        0.0, 12.0, 1e-13);
}

// Independent monic orthogonal polynomials: solve the Hankel normal equations
// by plain Gaussian elimination (no recurrence involved).
std::vector<double> direct_monic_coeffs(double mu, int k) {
    // p_k = x^k + sum_{i<k} c_i x^i with sum_i H[j][i] c_i = -m_{j+k}, j < k.
    std::vector<std::vector<double>> A(static_cast<size_t>(k),
                                       std::vector<double>(static_cast<size_t>(k + 1)));
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) A[j][static_cast<size_t>(i)] = eqm::half_line_moment(mu, i + j);
        A[j][static_cast<size_t>(k)] = -eqm::half_line_moment(mu, j + k);
    }
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(A[r][static_cast<size_t>(col)]) >
                std::abs(A[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
                piv = r;
        std::swap(A[static_cast<size_t>(col)], A[static_cast<size_t>(piv)]);
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = A[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                             A[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int cc = col; cc <= k; ++cc)
                A[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    f * A[static_cast<size_t>(col)][static_cast<size_t>(cc)];
        }
    }
    std::vector<double> c(static_cast<size_t>(k + 1));
    for (int i = 0; i < k; ++i)
        c[static_cast<size_t>(i)] = A[static_cast<size_t>(i)][static_cast<size_t>(k)] /
                                    A[static_cast<size_t>(i)][static_cast<size_t>(i)];
    c[static_cast<size_t>(k)] = 1.0;
    return c;
}
} // namespace

TEST_CASE("half-line moments") {
    CHECK(eqm::half_line_moment(0.0, 0) == doctest::Approx(std::sqrt(kPi) / 2.0));
    CHECK(eqm::half_line_moment(0.0, 1) == doctest::Approx(0.5));
    CHECK(eqm::half_line_moment(2.5, 0) == doctest::Approx(1.0)); // Gamma(3)/2
    CHECK_THROWS_AS(eqm::half_line_moment(0.0, -1), std::invalid_argument);
}

TEST_CASE("first recurrence coefficients by hand") {
    const auto basis = eqm::build_basis(0.0, 2);
    // H_1 = x - 1/sqrt(pi)
    CHECK(basis.alpha[0] == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-12));
    CHECK(basis.norms[0] == doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(eqm::build_basis(0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(eqm::build_basis(0.0, 17), std::invalid_argument);
    CHECK_THROWS_AS(eqm::build_basis(-1.0, 4), std::invalid_argument);
}

TEST_CASE("orthogonality residuals against direct quadrature") {
    for (const double mu : {0.0, 2.5}) {
        const auto basis = eqm::build_basis(mu, 6);
        for (int j = 0; j < 6; ++j) {
            CHECK(weighted_inner(basis, j, j) ==
                  doctest::Approx(basis.norms[static_cast<size_t>(j)]).epsilon(1e-8));
            for (int k = 0; k < j; ++k) {
                const double bound = 1e-8 * std::sqrt(basis.norms[static_cast<size_t>(j)] *
                                                      basis.norms[static_cast<size_t>(k)]);
                CHECK(std::abs(weighted_inner(basis, j, k)) <= bound);
            }
        }
    }
}

TEST_CASE("recurrence values match the moment-determinant construction") {
    for (const double mu : {0.0, 1.25}) {
        const auto basis = eqm::build_basis(mu, 8);
        for (int k = 1; k < 8; ++k) {
            const auto coeffs = direct_monic_coeffs(mu, k);
            for (const double x : {0.1, 0.7, 1.9, 3.3}) {
                double direct = 0.0, xp = 1.0;
                for (const double ci : coeffs) {
                    direct += ci * xp;
                    xp *= x;
                }
                const double rec = basis.eval_all(x)[static_cast<size_t>(k)];
                CHECK(rec == doctest::Approx(direct).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("f_n has unit mass and is nonnegative") {
    for (const auto& [n, mu] : std::vector<std::pair<int, double>>{{7, 0.0}, {5, 2.5}}) {
        const auto basis = eqm::build_basis(mu, n);
        const double m = oracle::integrate(
            [&](double x) { return eqm::fn_density(basis, x); }, 0.0, 12.0, 1e-12);
        CHECK(m == doctest::Approx(1.0).epsilon(1e-6));
        for (int i = 0; i <= 100; ++i) CHECK(eqm::fn_density(basis, 0.05 * i) >= 0.0);
    }
    CHECK_THROWS_AS(eqm::fn_density(eqm::build_basis(0.0, 3), -0.1), std::invalid_argument);
}

TEST_CASE("L1 distance to the limit density shrinks with n") {
    for (const double alpha : {0.0, 0.5}) {
        // Precompute the limit family so the integrand does not re-run the
        // edge solves at every quadrature node.
        double la = 0.0, lb = eqm::gauss_b_of_sigma(0.0), norm = 1.0;
        if (alpha > 0.0) {
            std::tie(la, lb) = eqm::solve_logpot_soft_edges(alpha);
            norm = oracle::integrate_weighted(
                [&](double t) { return 1.0 + alpha / (std::sqrt(la * lb) * t); }, la, lb,
                eqm::WeightKind::Semicircle, 1e-12);
        }
        auto limit = [&](double x) {
            if (x <= la || x >= lb) return 0.0;
            if (alpha > 0.0)
                return std::sqrt((lb - x) * (x - la)) *
                       (1.0 + alpha / (std::sqrt(la * lb) * x)) / norm;
            return std::sqrt((lb - x) / x) * (2.0 * x + lb) / (2.0 * kPi);
        };
        double prev = std::numeric_limits<double>::infinity();
        for (const int n : {3, 5, 7, 9, 11}) {
            const auto basis = eqm::build_basis(alpha * n, n);
            const double l1 = oracle::integrate(
                [&](double x) { return std::abs(eqm::fn_density(basis, x) - limit(x)); }, 1e-9,
                8.0, 1e-9);
            CHECK(l1 <= prev * 1.10); // non-increasing within 10% slack per step
            prev = l1;
        }
    }
}
