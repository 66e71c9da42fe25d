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
#pragma once

#include "qsine/solver.hpp"

namespace qsine {

// Benchmark problem definitions, stated once so the command line driver and
// the acceptance runner exercise identical configurations.

/// -u'' = 100 cos(2 pi x) cos(5 pi x) on (0,1), u(0) = u(1) = 0.
ProblemSpec poisson1d_problem(std::uint64_t n_phys);
double poisson1d_exact(double x);

/// Same forcing with u(0) = 1/2, u(1) = 1, lifted with the cubic
/// g = -(x-1)^3/2 + x^3.
LiftedProblem poisson1d_inhom_problem(std::uint64_t n_phys);
double poisson1d_inhom_exact(double x);

/// Fractional problem tau (kappa^2 - Laplace)^beta u = f with kappa = 40 and
/// tau = 4.279e-5; the forcing is left zero for callers to fill.
ProblemSpec fractional1d_problem(std::uint64_t n_phys, double beta);

/// 2D Poisson with trigonometric + linear forcing and the quadratic
/// boundary lift g = (3 x0^2 + 5 x1^2 + 1)/2.
LiftedProblem poisson2d_problem(std::uint64_t n_phys);

/// 2D fractional problem with kappa = 10/sqrt(2), tau = 0.01995, beta = 1.
ProblemSpec fractional2d_problem(std::uint64_t n_phys);

double relative_l2(const Eigen::VectorXd& u, const Eigen::VectorXd& ref);

/// Inverse diagonal vectors over the physical wavenumbers, either the fitted
/// sin(poly)/s values or the exact ones the fit approximates.
Eigen::VectorXd fitted_dinv_1d(const SpectralDiagonal& diag);
Eigen::VectorXd exact_dinv_1d(const SpectralDiagonal& diag);
Eigen::MatrixXd fitted_dinv_2d(const SpectralDiagonal& diag);
Eigen::MatrixXd exact_dinv_2d(const SpectralDiagonal& diag);

/// Row `center` of the squared folded solution operator (the solution
/// covariance up to the white-noise amplitude).
Eigen::VectorXd covariance_row_1d(const Eigen::VectorXd& dinv, std::uint64_t center);

/// 2D analogue: covariance of grid point (center, center) against the points
/// (center, j) of the same row.
Eigen::VectorXd covariance_row_2d(const Eigen::MatrixXd& dinv, std::uint64_t center);

/// Least-squares slope of log(y) against log(x); the scaling exponent of a
/// gate-count series.
double fit_scaling_exponent(const std::vector<double>& x, const std::vector<double>& y);

/// Relative shape error against a Matern row with least-squares amplitude.
double matern_row_error(const Eigen::VectorXd& row, double nu, double ell, double dx,
                        std::uint64_t center);

}  // namespace qsine
