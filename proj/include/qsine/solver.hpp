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

#include <string>
#include <utility>
#include <vector>

#include "qsine/polyenc.hpp"
#include "qsine/reflection.hpp"
#include "qsine/spectral.hpp"
#include "qsine/statevector.hpp"

namespace qsine {

class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Full solver circuit with its register map. Qubit order: rotation ancilla,
/// then one extended-index block per axis (reflection ancilla first within
/// each block), then segment flags, then shared carry ancillas.
struct SolverCircuit {
    Circuit circuit{1};
    int dim = 1;
    int n = 0;  ///< extended qubits per axis
    ShiftImpl shift_impl = ShiftImpl::Mcx;
    int rot = 0;
    int axis0_start = 1;          ///< extended block of axis 0 (1D: the block)
    int axis1_start = 0;          ///< 2D only
    int flag_count = 0;
    int carry_count = 0;
};

/// Fitted inverse diagonal for a 1D problem; defaults to the geometric
/// partition when boundaries are empty.
SpectralDiagonal fitted_diagonal_1d(const ProblemSpec& spec, int degree,
                                    std::vector<std::int64_t> boundaries = {});

/// Fitted 2D inverse diagonal. For Poisson the diagonal is truncated to zero
/// outside (0,k_split)^2 with per-axis boundaries {0, k_split, N}; for the
/// fractional family every quadrant of (0,N/2)^2 is fitted with boundaries
/// {0, k_split, N/2, N}.
SpectralDiagonal fitted_diagonal_2d(const ProblemSpec& spec, int degree, std::int64_t k_split);

SolverCircuit build_solver_circuit_1d(const SpectralDiagonal& diag, ShiftImpl impl);
SolverCircuit build_solver_circuit_2d(const SpectralDiagonal& diag, ShiftImpl impl);

struct QuantumSolveResult {
    Eigen::VectorXd u;  ///< physical grid values, same layout as ProblemSpec
    /// (forcing_norm, inverse_diagonal_scale, success_branch_norm): u equals
    /// the product of all factors times the unit-normalized success branch.
    std::vector<std::pair<std::string, double>> scale_chain;
    double success_probability = 0.0;
};

/// Simulates the solver circuit on the normalized forcing, postselects the
/// rotation-ancilla |1> branch with all other ancillas |0>, and undoes the
/// scale chain (forcing norm and diagonal scale). Throws SolverError on
/// ancilla leakage beyond 1e-10 or a degenerate success branch.
QuantumSolveResult quantum_solve(const ProblemSpec& spec, const SpectralDiagonal& diag,
                                 ShiftImpl impl = ShiftImpl::Mcx);

/// Classical reference with the same fitted diagonal: the folded solve with
/// dinv(k) = sin(fit(k)) / scale. Quantum and classical outputs of the same
/// diagonal agree to simulator precision.
Eigen::VectorXd classical_solve_fitted(const ProblemSpec& spec, const SpectralDiagonal& diag);

/// Draws independent white-noise forcings and solves each through the
/// quantum pipeline; deterministic for a fixed seed.
std::vector<Eigen::VectorXd> sample_random_field_quantum(const ProblemSpec& spec,
                                                         const SpectralDiagonal& diag,
                                                         int n_samples, std::uint64_t seed,
                                                         ShiftImpl impl = ShiftImpl::Mcx);

}  // namespace qsine
