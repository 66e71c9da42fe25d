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

/// Quantum Fourier transform on n qubits: per qubit a Hadamard followed by
/// controlled phase gates P_l = diag(1, e^{2 pi i / 2^l}) from the lower
/// qubits, then a swap network reversing qubit order. The circuit unitary
/// equals dft_matrix(1 << n).
Circuit build_qft(int n);
Circuit build_qft_inverse(int n);

/// F_N with entries omega^{jk} / sqrt(N), omega = e^{2 pi i / N}.
Eigen::MatrixXcd dft_matrix(std::uint64_t n);

}  // namespace qsine
