// Copyright 2026 The qsine authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qsine/experiments.hpp"

#include <cmath>
#include <numbers>

namespace qsine {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd sample_forcing_1d(const std::function<double(double)>& f, std::uint64_t half) {
    Eigen::VectorXd v(half);
    v(0) = 0.0;
    for (std::uint64_t j = 1; j < half; ++j) v(j) = f(double(j) / double(half));
    return v;
}

double benchmark_forcing(double x) {
    return 100.0 * std::cos(2.0 * kPi * x) * std::cos(5.0 * kPi * x);
}

}  // namespace

ProblemSpec poisson1d_problem(std::uint64_t n_phys) {
    ProblemSpec spec;
    spec.family = Family::Poisson;
    spec.dim = 1;
    spec.length = 1.0;
    spec.n_extended = 2 * n_phys;
    spec.forcing = sample_forcing_1d(benchmark_forcing, n_phys);
    return spec;
}

double poisson1d_exact(double x) {
    return 100.0 *
           (-58.0 + 116.0 * x + 49.0 * std::cos(3.0 * kPi * x) + 9.0 * std::cos(7.0 * kPi * x)) /
           (882.0 * kPi * kPi);
}

LiftedProblem poisson1d_inhom_problem(std::uint64_t n_phys) {
    const ProblemSpec spec = poisson1d_problem(n_phys);
    auto g = [](double x) { return -0.5 * (x - 1) * (x - 1) * (x - 1) + x * x * x; };
    auto g_dd = [](double x) { return -3.0 * (x - 1) + 6.0 * x; };
    return lift_inhomogeneous_1d(spec, 0.5, 1.0, g, g_dd);
}

double poisson1d_inhom_exact(double x) { return 0.5 * (x + 1.0) + poisson1d_exact(x); }

ProblemSpec fractional1d_problem(std::uint64_t n_phys, double beta) {
    ProblemSpec spec;
    spec.family = Family::Fractional;
    spec.dim = 1;
    spec.length = 1.0;
    spec.n_extended = 2 * n_phys;
    spec.kappa = 40.0;
    spec.beta = beta;
    spec.tau = 4.279e-5;
    spec.forcing = Eigen::VectorXd::Zero(n_phys);
    return spec;
}

LiftedProblem poisson2d_problem(std::uint64_t n_phys) {
    ProblemSpec spec;
    spec.family = Family::Poisson;
    spec.dim = 2;
    spec.length = 1.0;
    spec.n_extended = 2 * n_phys;
    spec.forcing = Eigen::VectorXd::Zero(n_phys * n_phys);
    for (std::uint64_t j0 = 1; j0 < n_phys; ++j0)
        for (std::uint64_t j1 = 1; j1 < n_phys; ++j1) {
            const double x0 = double(j0) / double(n_phys);
            const double x1 = double(j1) / double(n_phys);
            spec.forcing(j0 * n_phys + j1) =
                13.0 * kPi * kPi * std::sin(2.0 * kPi * x0) * std::sin(3.0 * kPi * x1) +
                17.0 * kPi * kPi * std::sin(kPi * x0) * std::sin(4.0 * kPi * x1) - 9.0 * x0 -
                15.0 * x1;
        }
    auto g = [](double x0, double x1) { return (3.0 * x0 * x0 + 5.0 * x1 * x1 + 1.0) / 2.0; };
    auto lap_g = [](double, double) { return 8.0; };
    return lift_inhomogeneous_2d(spec, g, g, lap_g);
}

ProblemSpec fractional2d_problem(std::uint64_t n_phys) {
    ProblemSpec spec;
    spec.family = Family::Fractional;
    spec.dim = 2;
    spec.length = 1.0;
    spec.n_extended = 2 * n_phys;
    spec.kappa = 10.0 / std::sqrt(2.0);
    spec.beta = 1.0;
    spec.tau = 0.01995;
    spec.forcing = Eigen::VectorXd::Zero(n_phys * n_phys);
    return spec;
}

double relative_l2(const Eigen::VectorXd& u, const Eigen::VectorXd& ref) {
    return (u - ref).norm() / ref.norm();
}

Eigen::VectorXd fitted_dinv_1d(const SpectralDiagonal& diag) {
    const std::int64_t half = std::int64_t{1} << (diag.n - 1);
    Eigen::VectorXd dinv(half);
    for (std::int64_t k = 0; k < half; ++k) dinv(k) = std::sin(diag.fit1.eval(k)) / diag.scale;
    return dinv;
}

Eigen::VectorXd exact_dinv_1d(const SpectralDiagonal& diag) {
    const std::int64_t half = std::int64_t{1} << (diag.n - 1);
    Eigen::VectorXd dinv(half);
    for (std::int64_t k = 0; k < half; ++k) dinv(k) = diag.exact1(k);
    return dinv;
}

Eigen::MatrixXd fitted_dinv_2d(const SpectralDiagonal& diag) {
    const std::int64_t half = std::int64_t{1} << (diag.n - 1);
    Eigen::MatrixXd dinv(half, half);
    for (std::int64_t k0 = 0; k0 < half; ++k0)
        for (std::int64_t k1 = 0; k1 < half; ++k1)
            dinv(k0, k1) = std::sin(diag.fit2.eval(k0, k1)) / diag.scale;
    return dinv;
}

Eigen::MatrixXd exact_dinv_2d(const SpectralDiagonal& diag) {
    const std::int64_t half = std::int64_t{1} << (diag.n - 1);
    Eigen::MatrixXd dinv(half, half);
    for (std::int64_t k0 = 0; k0 < half; ++k0)
        for (std::int64_t k1 = 0; k1 < half; ++k1) dinv(k0, k1) = diag.exact2(k0, k1);
    return dinv;
}

Eigen::VectorXd covariance_row_1d(const Eigen::VectorXd& dinv, std::uint64_t center) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dinv.size());
    e(center) = 1.0;
    return solve_folded_1d(solve_folded_1d(e, dinv), dinv);
}

Eigen::VectorXd covariance_row_2d(const Eigen::MatrixXd& dinv, std::uint64_t center) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(dinv.rows(), dinv.cols());
    e(center, center) = 1.0;
    const Eigen::MatrixXd c = solve_folded_2d(solve_folded_2d(e, dinv), dinv);
    return c.row(static_cast<Eigen::Index>(center));
}

double fit_scaling_exponent(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw SolverError("exponent fit needs >= 2 points");
    double mx = 0.0, my = 0.0;
    const double count = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]) / count;
        my += std::log(y[i]) / count;
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
        den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    }
    return num / den;
}

double matern_row_error(const Eigen::VectorXd& row, double nu, double ell, double dx,
                        std::uint64_t center) {
    Eigen::VectorXd want(row.size());
    for (Eigen::Index j = 0; j < row.size(); ++j)
        want(j) = matern_covariance(std::abs(double(j) - double(center)) * dx, nu, ell);
    const double gamma = row.dot(want) / want.dot(want);
    return (row - gamma * want).norm() / (gamma * want.norm());
}

}  // namespace qsine
