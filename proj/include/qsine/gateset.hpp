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

class TranspileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GateCount {
    long cnot_count = 0;
    long u3_count = 0;
    long total = 0;
    int num_ancilla = 0;
};

/// Defining 2x2 matrix of a single-target gate kind (Swap excluded).
Eigen::Matrix2cd gate_matrix(GateKind kind, double theta = 0.0, double phi = 0.0,
                             double lambda = 0.0);
Eigen::Matrix2cd gate_matrix(const Gate& gate);

/// U3 parameters (theta, phi, lambda) and global phase delta such that
/// U = e^{i delta} U3(theta, phi, lambda).
struct U3Params {
    double theta, phi, lambda, delta;
};
U3Params u3_params(const Eigen::Matrix2cd& u);

/// Lowers a circuit to the universal {CNOT, U3} set. The output unitary
/// equals the input unitary up to a single global phase.
Circuit transpile(const Circuit& circuit);

enum class McxStrategy { VChainClean, AncillaFree };

/// Multi-controlled X on register [controls 0..m-1, target m, ancillas...].
/// Uses a clean-ancilla v-chain when ancilla_budget >= m-2, otherwise an
/// ancilla-free recursive decomposition. Ancillas are restored to |0>.
Circuit decompose_mcx(int num_controls, int ancilla_budget);

/// Exact counts for an already-transpiled circuit.
GateCount count_gates(const Circuit& circuit, int num_ancilla = 0);

}  // namespace qsine
