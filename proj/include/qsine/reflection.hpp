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

#include "qsine/circuit.hpp"

namespace qsine {

enum class ShiftImpl { Mcx, RippleCarry };

/// Antisymmetric extension matrix R (N x N/2): maps (0, f_1, ..., f_{N/2-1})
/// to (0, f_1, ..., f_{N/2-1}, 0, -f_{N/2-1}, ..., -f_1).
Eigen::MatrixXd build_reflection_matrix(std::uint64_t n_extended);

/// Block-encoding of R on [ancilla, n-1 data qubits]: on the ancilla-|0>
/// subspace the unitary maps f to (i/sqrt(2)) R f. Columns follow the
/// explicit matrix returned by expected_reflection_unitary.
struct ReflectionCircuit {
    int n = 0;  ///< total width of ancilla + data register, N = 2^n
    ShiftImpl shift_impl = ShiftImpl::Mcx;
    Circuit circuit;
    int ancilla_count = 0;  ///< carry ancillas beyond the reflection qubit
};

Circuit build_u_r0(int n);
Circuit build_u_r1(int n);
Circuit build_u_r2(int n);
Circuit build_u_r3(int n, ShiftImpl impl);

/// Incrementer |k> -> |(k+1) mod 2^m> on qubits 0..m-1 (qubit 0 is the most
/// significant data bit); the ripple-carry variant appends m-1 carry
/// ancillas at indices m.. which start and end in |0>.
Circuit build_forward_shift(int m, ShiftImpl impl);
int forward_shift_ancillas(int m, ShiftImpl impl);

ReflectionCircuit build_reflection_unitary(int n, ShiftImpl impl);

/// The N x N matrix the reflection circuit realizes on the main register:
/// column 0 -> e_{N/2}; column k<N/2 -> (i e_k - i e_{N-k})/sqrt(2);
/// column N/2 -> e_0; column N/2+j -> (e_j + e_{N-j})/sqrt(2).
Eigen::MatrixXcd expected_reflection_unitary(std::uint64_t n_extended);

/// Quantum sine transform: reflection circuit, QFT on the full main
/// register, inverse reflection circuit. On the data subspace (reflection
/// ancilla |0>, carries |0>) it acts as (1/2) R^T F_N R = i * DST-I.
Circuit build_qst(int n, ShiftImpl impl);

/// Sub-unitary of `circuit` on the first `main_qubits` qubits with all
/// remaining qubits fixed to |0> in and out. Throws if the circuit leaks
/// amplitude out of that subspace beyond 1e-10.
Eigen::MatrixXcd main_register_unitary(const Circuit& circuit, int main_qubits);

}  // namespace qsine
