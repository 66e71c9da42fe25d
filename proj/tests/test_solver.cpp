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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsine/solver.hpp"

using namespace qsine;

namespace {

constexpr double kPi = std::numbers::pi;

ProblemSpec poisson_1d(std::uint64_t n_ext) {
    ProblemSpec spec;
    spec.family = Family::Poisson;
    spec.dim = 1;
    spec.length = 1.0;
    spec.n_extended = n_ext;
    const std::uint64_t half = n_ext / 2;
    spec.forcing.resize(half);
    spec.forcing(0) = 0.0;
    for (std::uint64_t j = 1; j < half; ++j) {
        const double x = double(j) / double(half);
        spec.forcing(j) = std::sin(3.0 * kPi * x) + 0.3 * x * (1.0 - x);
    }
    return spec;
}

ProblemSpec fractional_1d(std::uint64_t n_ext, double beta) {
    ProblemSpec spec = poisson_1d(n_ext);
    spec.family = Family::Fractional;
    spec.kappa = 40.0;
    spec.beta = beta;
    spec.tau = 4.279e-5;
    return spec;
}

ProblemSpec poisson_2d(std::uint64_t n_ext) {
    ProblemSpec spec;
    spec.family = Family::Poisson;
    spec.dim = 2;
    spec.length = 1.0;
    spec.n_extended = n_ext;
    const std::uint64_t half = n_ext / 2;
    spec.forcing = Eigen::VectorXd::Zero(half * half);
    for (std::uint64_t j0 = 1; j0 < half; ++j0)
        for (std::uint64_t j1 = 1; j1 < half; ++j1) {
            const double x0 = double(j0) / double(half);
            const double x1 = double(j1) / double(half);
            spec.forcing(j0 * half + j1) =
                std::sin(2.0 * kPi * x0) * std::sin(kPi * x1) + 0.2 * x0 * x1 * (1 - x0) * (1 - x1);
        }
    return spec;
}

double max_abs_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("1d quantum solve equals the classical fitted reference") {
    for (const ShiftImpl impl : {ShiftImpl::Mcx, ShiftImpl::RippleCarry}) {
        const ProblemSpec spec = poisson_1d(32);
        const SpectralDiagonal diag = fitted_diagonal_1d(spec, 3);
        const QuantumSolveResult res = quantum_solve(spec, diag, impl);
        const Eigen::VectorXd want = classical_solve_fitted(spec, diag);
        CHECK(max_abs_diff(res.u, want) < 1e-9);
        CHECK(res.success_probability > 0.0);
        CHECK(res.success_probability <= 1.0 + 1e-12);
    }
}

TEST_CASE("1d fractional quantum solve equals the classical fitted reference") {
    const ProblemSpec spec = fractional_1d(32, 1.0);
    const SpectralDiagonal diag = fitted_diagonal_1d(spec, 3);
    const QuantumSolveResult res = quantum_solve(spec, diag);
    CHECK(max_abs_diff(res.u, classical_solve_fitted(spec, diag)) < 1e-9);
}

TEST_CASE("sine eigenfunction is solved to within the fit error") {
    // forcing sin(m pi x) has analytic solution sin(m pi x) / (m pi)^2
    const std::uint64_t n_ext = 64, half = n_ext / 2;
    ProblemSpec spec = poisson_1d(n_ext);
    const int m = 2;
    for (std::uint64_t j = 0; j < half; ++j)
        spec.forcing(j) = std::sin(m * kPi * double(j) / double(half));
    const SpectralDiagonal diag = fitted_diagonal_1d(spec, 4);
    const QuantumSolveResult res = quantum_solve(spec, diag);
    const double lambda = (m * kPi / spec.length) * (m * kPi / spec.length);
    for (std::uint64_t j = 0; j < half; ++j)
        CHECK(res.u(j) == doctest::Approx(spec.forcing(j) / lambda).epsilon(5e-3).scale(1.0));
}

TEST_CASE("constant diagonal reproduces the forcing") {
    const ProblemSpec spec = poisson_1d(16);
    const SpectralDiagonal diag =
        make_diagonal_1d([](std::int64_t) { return 0.7; }, 4, 0, {0, 16});
    const QuantumSolveResult res = quantum_solve(spec, diag);
    CHECK(max_abs_diff(res.u, 0.7 * spec.forcing) < 1e-9);
    CHECK(res.success_probability == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("zero diagonal leaves an empty success branch") {
    const ProblemSpec spec = poisson_1d(16);
    const SpectralDiagonal diag = make_diagonal_1d([](std::int64_t) { return 0.0; }, 4, 0, {0, 16});
    CHECK_THROWS_AS((void)quantum_solve(spec, diag), SolverError);
}

TEST_CASE("solution is linear in the forcing and vanishes at the boundary") {
    ProblemSpec spec = poisson_1d(32);
    const SpectralDiagonal diag = fitted_diagonal_1d(spec, 3);
    const Eigen::VectorXd u1 = quantum_solve(spec, diag).u;
    spec.forcing *= 2.0;
    const Eigen::VectorXd u2 = quantum_solve(spec, diag).u;
    CHECK(max_abs_diff(u2, 2.0 * u1) < 1e-9);
    CHECK(std::abs(u1(0)) < 1e-12);
}

TEST_CASE("scale chain reconstructs the postselection probability") {
    const ProblemSpec spec = poisson_1d(32);
    const SpectralDiagonal diag = fitted_diagonal_1d(spec, 3);
    const QuantumSolveResult res = quantum_solve(spec, diag);
    REQUIRE(res.scale_chain.size() == 3);
    const double factor = res.scale_chain[0].second * res.scale_chain[1].second;
    const double implied = res.u.squaredNorm() / (factor * factor);
    CHECK(res.success_probability == doctest::Approx(implied).epsilon(1e-10));
    CHECK(res.scale_chain[2].second ==
          doctest::Approx(std::sqrt(res.success_probability)).epsilon(1e-12));
}

TEST_CASE("both shift implementations give identical solutions") {
    const ProblemSpec spec = fractional_1d(32, 1.5);
    const SpectralDiagonal diag = fitted_diagonal_1d(spec, 3);
    const Eigen::VectorXd a = quantum_solve(spec, diag, ShiftImpl::Mcx).u;
    const Eigen::VectorXd b = quantum_solve(spec, diag, ShiftImpl::RippleCarry).u;
    CHECK(max_abs_diff(a, b) < 1e-12);
}

TEST_CASE("2d quantum solve equals the classical fitted reference") {
    const ProblemSpec spec = poisson_2d(16);
    const SpectralDiagonal diag = fitted_diagonal_2d(spec, 3, 4);
    const QuantumSolveResult res = quantum_solve(spec, diag);
    CHECK(max_abs_diff(res.u, classical_solve_fitted(spec, diag)) < 1e-9);
    for (std::uint64_t j = 0; j < 8; ++j) {
        CHECK(std::abs(res.u(j)) < 1e-12);
        CHECK(std::abs(res.u(j * 8)) < 1e-12);
    }
}

TEST_CASE("2d fractional quantum solve equals the classical fitted reference") {
    ProblemSpec spec = poisson_2d(8);
    spec.family = Family::Fractional;
    spec.kappa = 10.0 / std::sqrt(2.0);
    spec.beta = 1.0;
    spec.tau = 0.01995;
    const SpectralDiagonal diag = fitted_diagonal_2d(spec, 2, 2);
    const QuantumSolveResult res = quantum_solve(spec, diag);
    CHECK(max_abs_diff(res.u, classical_solve_fitted(spec, diag)) < 1e-9);
}

TEST_CASE("2d separable eigenfunction is solved to within the fit error") {
    const std::uint64_t n_ext = 16, half = n_ext / 2;
    ProblemSpec spec = poisson_2d(n_ext);
    for (std::uint64_t j0 = 0; j0 < half; ++j0)
        for (std::uint64_t j1 = 0; j1 < half; ++j1)
            spec.forcing(j0 * half + j1) = std::sin(kPi * double(j0) / double(half)) *
                                           std::sin(2.0 * kPi * double(j1) / double(half));
    const SpectralDiagonal diag = fitted_diagonal_2d(spec, 3, 4);
    const QuantumSolveResult res = quantum_solve(spec, diag);
    const double lambda = kPi * kPi * (1.0 + 4.0);
    for (std::uint64_t j = 0; j < half * half; ++j)
        CHECK(res.u(j) == doctest::Approx(spec.forcing(j) / lambda).epsilon(2e-2).scale(0.1));
}

TEST_CASE("random field sampler is deterministic in the seed") {
    ProblemSpec spec = fractional_1d(16, 1.0);
    const SpectralDiagonal diag = fitted_diagonal_1d(spec, 3);
    const auto a = sample_random_field_quantum(spec, diag, 3, 7);
    const auto b = sample_random_field_quantum(spec, diag, 3, 7);
    const auto c = sample_random_field_quantum(spec, diag, 3, 8);
    REQUIRE(a.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(max_abs_diff(a[i], b[i]) == 0.0);
        CHECK(std::abs(a[i](0)) < 1e-12);
    }
    CHECK(max_abs_diff(a[0], c[0]) > 0.0);
    CHECK(max_abs_diff(a[0], a[1]) > 0.0);
}

TEST_CASE("input validation rejects malformed problems") {
    ProblemSpec spec = poisson_1d(32);
    const SpectralDiagonal diag = fitted_diagonal_1d(spec, 3);
    ProblemSpec bad = spec;
    bad.forcing(0) = 1.0;
    CHECK_THROWS_AS((void)quantum_solve(bad, diag), SolverError);
    ProblemSpec wrong_size = spec;
    wrong_size.n_extended = 64;
    CHECK_THROWS_AS((void)quantum_solve(wrong_size, diag), SolverError);
    CHECK_THROWS_AS((void)sample_random_field_quantum(spec, diag, 1, 0), SolverError);
    CHECK_THROWS_AS((void)fitted_diagonal_2d(poisson_2d(16), 3, 0), SolverError);
}
