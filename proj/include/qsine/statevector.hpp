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
#include <vector>

#include "qsine/circuit.hpp"

namespace qsine {

/// Dense complex amplitudes of a q-qubit register, length 2^q.
struct StateVector {
    int num_qubits = 0;
    std::vector<cplx> amplitudes;

    std::uint64_t dim() const { return std::uint64_t{1} << num_qubits; }
    double norm() const;
};

struct LoadedState {
    StateVector state;
    double norm_factor;  ///< ||values||_2 removed during normalization
};

StateVector init_basis(int num_qubits, std::uint64_t k);

/// Normalizes `values` into a unit state; the removed norm is returned so
/// callers can undo the scaling classically.
LoadedState load_amplitudes(int num_qubits, const std::vector<cplx>& values);

void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

/// Full 2^q x 2^q matrix of a circuit, built column-by-column. Test oracle;
/// guarded to q <= 12.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

}  // namespace qsine
