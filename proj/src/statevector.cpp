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
#include "qsine/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "qsine/gateset.hpp"

namespace qsine {

namespace {

// Spreads the bits of `packed` over the positions not listed in
// `sorted_fixed`, leaving zeros at the fixed positions.
std::uint64_t expand_index(std::uint64_t packed, const std::vector<int>& sorted_fixed) {
    std::uint64_t x = packed;
    for (int pos : sorted_fixed) {
        const std::uint64_t low = x & ((std::uint64_t{1} << pos) - 1);
        x = ((x >> pos) << (pos + 1)) | low;
    }
    return x;
}

}  // namespace

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

StateVector init_basis(int num_qubits, std::uint64_t k) {
    if (num_qubits < 1) throw CircuitError("register needs at least one qubit");
    StateVector sv;
    sv.num_qubits = num_qubits;
    sv.amplitudes.assign(std::uint64_t{1} << num_qubits, cplx{0.0, 0.0});
    if (k >= sv.dim()) throw std::out_of_range("basis index out of range");
    sv.amplitudes[k] = cplx{1.0, 0.0};
    return sv;
}

LoadedState load_amplitudes(int num_qubits, const std::vector<cplx>& values) {
    StateVector sv;
    sv.num_qubits = num_qubits;
    if (values.size() != (std::uint64_t{1} << num_qubits))
        throw std::invalid_argument("amplitude count must equal 2^q");
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    const double nrm = std::sqrt(s);
    if (nrm == 0.0) throw std::invalid_argument("cannot load the zero vector");
    sv.amplitudes.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sv.amplitudes[i] = values[i] / nrm;
    return {std::move(sv), nrm};
}

void apply_gate(StateVector& state, const Gate& gate) {
    const int q = state.num_qubits;
    std::vector<int> fixed;
    for (const auto& c : gate.controls) fixed.push_back(bit_shift(q, c.qubit));

    if (gate.kind == GateKind::Swap) {
        const int pa = bit_shift(q, gate.target);
        const int pb = bit_shift(q, gate.target2);
        fixed.push_back(pa);
        fixed.push_back(pb);
        std::sort(fixed.begin(), fixed.end());
        std::uint64_t ctrl_mask = 0;
        for (const auto& c : gate.controls)
            if (c.positive) ctrl_mask |= std::uint64_t{1} << bit_shift(q, c.qubit);
        const std::uint64_t loops = state.dim() >> fixed.size();
        auto& amp = state.amplitudes;
        for (std::uint64_t i = 0; i < loops; ++i) {
            const std::uint64_t base = expand_index(i, fixed) | ctrl_mask;
            std::swap(amp[base | (std::uint64_t{1} << pa)],
                      amp[base | (std::uint64_t{1} << pb)]);
        }
        return;
    }

    const Eigen::Matrix2cd u = gate_matrix(gate);
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const int pt = bit_shift(q, gate.target);
    fixed.push_back(pt);
    std::sort(fixed.begin(), fixed.end());
    std::uint64_t ctrl_mask = 0;
    for (const auto& c : gate.controls)
        if (c.positive) ctrl_mask |= std::uint64_t{1} << bit_shift(q, c.qubit);
    const std::uint64_t tbit = std::uint64_t{1} << pt;
    const std::uint64_t loops = state.dim() >> fixed.size();
    auto& amp = state.amplitudes;
    for (std::uint64_t i = 0; i < loops; ++i) {
        const std::uint64_t i0 = expand_index(i, fixed) | ctrl_mask;
        const std::uint64_t i1 = i0 | tbit;
        const cplx a0 = amp[i0], a1 = amp[i1];
        amp[i0] = u00 * a0 + u01 * a1;
        amp[i1] = u10 * a0 + u11 * a1;
    }
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
    if (circuit.num_qubits() != state.num_qubits)
        throw CircuitError("circuit width does not match register");
    for (const auto& g : circuit.gates()) apply_gate(state, g);
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
    const int q = circuit.num_qubits();
    if (q > 12) throw CircuitError("circuit_unitary limited to 12 qubits");
    const std::uint64_t dim = std::uint64_t{1} << q;
    Eigen::MatrixXcd u(dim, dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        StateVector sv = init_basis(q, k);
        apply_circuit(sv, circuit);
        for (std::uint64_t j = 0; j < dim; ++j) u(j, k) = sv.amplitudes[j];
    }
    return u;
}

}  // namespace qsine
