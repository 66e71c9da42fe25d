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

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "qsine/circuit.hpp"

namespace qsine {

class SpectralError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Family { Poisson, Fractional };

/// Dirichlet boundary value problem on (0, L)^dim, discretised on the
/// antisymmetrically doubled domain with n_extended points per axis. The
/// physical grid holds n_extended/2 points per axis at x_j = 2 L j / N;
/// forcing samples are stored row-major in 2D with the boundary index 0
/// entries fixed to zero.
struct ProblemSpec {
    Family family = Family::Poisson;
    int dim = 1;
    double length = 1.0;
    std::uint64_t n_extended = 0;  ///< N, power of two >= 4, per axis
    double kappa = 0.0, beta = 1.0, tau = 1.0;  ///< Fractional only
    Eigen::VectorXd forcing;
};

struct SpectralSolution {
    Eigen::VectorXd u;          ///< physical grid values (vanish at index 0)
    Eigen::VectorXcd fourier;   ///< extended-domain Fourier coefficients
};

/// Unitary DFT (1/sqrt(N) both ways); forward uses the +i kernel so that
/// fft(v) == dft_matrix(N) * v. N must be a power of two.
Eigen::VectorXcd fft(const Eigen::VectorXcd& v, bool inverse = false);

/// (0, f_1, ..., f_{N/2-1}) -> (0, f_1, ..., f_{N/2-1}, 0, -f_{N/2-1}, ..., -f_1)
Eigen::VectorXd extend_antisymmetric(const Eigen::VectorXd& f);

/// Forward diagonal entries (pi/L)^2 max(k,1)^2 for k = 0..N/2-1.
Eigen::VectorXd diagonal_poisson_1d(std::uint64_t n_extended, double length);

/// Forward diagonal entries tau (kappa^2 + (k pi/L)^2)^beta.
Eigen::VectorXd diagonal_fractional_1d(std::uint64_t n_extended, double length, double kappa,
                                       double beta, double tau);

/// Inverse (solution operator) values d(k0,k1) on [0,N/2)^2: Poisson
/// (L/pi)^2/((k0)^2+(k1)^2) in the open quadrant and 0 on the axes;
/// Fractional 1/(tau (kappa^2 + (pi/L)^2 (k0^2+k1^2))^beta) in the open
/// quadrant and 0 otherwise.
Eigen::MatrixXd diagonal_2d(Family family, std::uint64_t n_extended, double length,
                            double kappa = 0.0, double beta = 1.0, double tau = 1.0);

/// Extended-path spectral solve: antisymmetric extension, DFT, inverse
/// mirrored diagonal, inverse DFT, restriction to the physical grid.
SpectralSolution solve_classical(const ProblemSpec& spec);

/// Folded half-size solve (1/4) S^dagger diag(dinv) S f with S = R^T F R,
/// for an arbitrary inverse diagonal over the physical wavenumbers
/// k = 0..N/2-1 (e.g. a fitted one). Used for quantum cross-checks.
Eigen::VectorXd solve_folded_1d(const Eigen::VectorXd& f, const Eigen::VectorXd& dinv);

/// 2D analogue (1/16) with per-axis sine transforms; f and dinv are
/// (N/2)x(N/2), f indexed (j0, j1) and dinv indexed (k0, k1).
Eigen::MatrixXd solve_folded_2d(const Eigen::MatrixXd& f, const Eigen::MatrixXd& dinv);

/// Inhomogeneous boundary conditions via superposition u = v + g.
struct LiftedProblem {
    ProblemSpec homogeneous;   ///< forcing replaced by f + laplace(g)
    Eigen::VectorXd g_samples; ///< g on the physical grid, same layout as u
};

LiftedProblem lift_inhomogeneous_1d(const ProblemSpec& spec, double u_lo, double u_hi,
                                    const std::function<double(double)>& g,
                                    const std::function<double(double)>& g_dd);

LiftedProblem lift_inhomogeneous_2d(const ProblemSpec& spec,
                                    const std::function<double(double, double)>& boundary,
                                    const std::function<double(double, double)>& g,
                                    const std::function<double(double, double)>& laplace_g);

/// Matern covariance with smoothness nu and length scale ell; 1 at r = 0.
double matern_covariance(double r, double nu, double ell);

struct SpdeParams {
    double kappa = 0.0;
    double beta = 0.0;
    double tau = 0.0;
};

SpdeParams spde_params(double nu, double ell, int dim);

/// Dense covariance of the discrete fractional solution,
/// (1/N) (R^T F^dagger R) D^{-2} (R^T F R), as an (N/2)x(N/2) real matrix.
Eigen::MatrixXd covariance_matrix(const ProblemSpec& spec);

/// n samples with entry 0 fixed to zero and the rest N(0, 1/tau^2) / n.
Eigen::VectorXd sample_white_noise(std::uint64_t n, double tau, std::uint64_t seed);

}  // namespace qsine
