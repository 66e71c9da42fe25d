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
#include "qsine/reflection.hpp"

#include <cmath>

#include "qsine/qft.hpp"
#include "qsine/statevector.hpp"

namespace qsine {

namespace {

// Incrementer gates shared by the plain and the reflection-controlled
// variants. `control` < 0 emits the plain circuit; otherwise only the gates
// writing to data qubits gain the extra control, while carry bookkeeping
// runs unconditionally and cancels itself when the control is off.
void emit_forward_shift(Circuit& c, int m, ShiftImpl impl, int data0, int anc0, int control) {
    auto data_gate = [&](Gate g) {
        if (control >= 0) g.controls.push_back({control, true});
        c.add(std::move(g));
    };
    auto x_on = [&](int q, std::vector<Control> ctl) {
        Gate g{GateKind::X, q};
        g.controls = std::move(ctl);
        data_gate(std::move(g));
    };

    if (impl == ShiftImpl::Mcx) {
        // cascade: flip k_j iff all lower bits are 1, largest gate first
        for (int j = 0; j < m; ++j) {
            std::vector<Control> ctl;
            for (int l = j + 1; l < m; ++l) ctl.push_back({data0 + l, true});
            x_on(data0 + j, std::move(ctl));
        }
        return;
    }

    const int last = data0 + m - 1;
    x_on(last, {});
    if (m == 1) return;
    x_on(data0 + m - 2, {{last, false}});
    if (m == 2) return;

    // carry chain: a_j holds the AND of the original bits k_{j+1}..k_{m-1};
    // open controls read the already-incremented lower bits
    auto a = [&](int j) { return anc0 + j; };
    auto carry_toffoli = [&](int j) {
        Gate g{GateKind::X, a(j)};
        g.controls = {{a(j + 1), true}, {data0 + j + 1, false}};
        c.add(std::move(g));
    };
    {
        Gate g{GateKind::X, a(m - 2)};
        g.controls = {{last, false}};
        c.add(std::move(g));
    }
    for (int j = m - 3; j >= 0; --j) {
        carry_toffoli(j);
        x_on(data0 + j, {{a(j), true}});
    }
    for (int j = 0; j <= m - 3; ++j) carry_toffoli(j);
    {
        Gate g{GateKind::X, a(m - 2)};
        g.controls = {{last, false}};
        c.add(std::move(g));
    }
}

}  // namespace

Eigen::MatrixXd build_reflection_matrix(std::uint64_t n_extended) {
    const std::uint64_t n = n_extended;
    if (n < 4 || (n & (n - 1)) != 0)
        throw std::invalid_argument("extended size must be a power of two >= 4");
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n / 2);
    for (std::uint64_t k = 1; k < n / 2; ++k) {
        r(k, k) = 1.0;
        r(n - k, k) = -1.0;
    }
    return r;
}

int forward_shift_ancillas(int m, ShiftImpl impl) {
    return impl == ShiftImpl::RippleCarry && m >= 3 ? m - 1 : 0;
}

Circuit build_forward_shift(int m, ShiftImpl impl) {
    if (m < 1) throw CircuitError("shift register needs at least one qubit");
    Circuit c(m + forward_shift_ancillas(m, impl));
    emit_forward_shift(c, m, impl, 0, m, -1);
    return c;
}

Circuit build_u_r0(int n) {
    if (n < 2) throw CircuitError("reflection register needs n >= 2");
    Circuit c(n);
    c.x(0);
    c.b(0);
    return c;
}

Circuit build_u_r1(int n) {
    if (n < 2) throw CircuitError("reflection register needs n >= 2");
    Circuit c(n);
    Gate g{GateKind::Bdg, 0};
    for (int j = 1; j < n; ++j) g.controls.push_back({j, false});
    c.add(std::move(g));
    return c;
}

Circuit build_u_r2(int n) {
    if (n < 2) throw CircuitError("reflection register needs n >= 2");
    Circuit c(n);
    for (int j = 1; j < n; ++j) c.cx(0, j);
    return c;
}

Circuit build_u_r3(int n, ShiftImpl impl) {
    if (n < 2) throw CircuitError("reflection register needs n >= 2");
    const int m = n - 1;
    Circuit c(n + forward_shift_ancillas(m, impl));
    emit_forward_shift(c, m, impl, 1, n, 0);
    return c;
}

ReflectionCircuit build_reflection_unitary(int n, ShiftImpl impl) {
    const int m = n - 1;
    const int carries = forward_shift_ancillas(m, impl);
    ReflectionCircuit rc{n, impl, Circuit(n + carries), carries};
    std::vector<int> main_map(n);
    for (int j = 0; j < n; ++j) main_map[j] = j;
    rc.circuit.append_mapped(build_u_r0(n), main_map);
    rc.circuit.append_mapped(build_u_r1(n), main_map);
    rc.circuit.append_mapped(build_u_r2(n), main_map);
    rc.circuit.append(build_u_r3(n, impl));
    return rc;
}

Eigen::MatrixXcd expected_reflection_unitary(std::uint64_t n_extended) {
    const std::uint64_t n = n_extended;
    const std::uint64_t half = n / 2;
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    u(half, 0) = 1.0;
    u(0, half) = 1.0;
    for (std::uint64_t k = 1; k < half; ++k) {
        u(k, k) = cplx{0.0, s};
        u(n - k, k) = cplx{0.0, -s};
        u(k, half + k) = s;
        u(n - k, half + k) = s;
    }
    return u;
}

Circuit build_qst(int n, ShiftImpl impl) {
    const ReflectionCircuit rc = build_reflection_unitary(n, impl);
    Circuit c(rc.circuit.num_qubits());
    std::vector<int> main_map(n);
    for (int j = 0; j < n; ++j) main_map[j] = j;
    c.append(rc.circuit);
    c.append_mapped(build_qft(n), main_map);
    c.append(rc.circuit.inverse());
    return c;
}

Eigen::MatrixXcd main_register_unitary(const Circuit& circuit, int main_qubits) {
    const int q = circuit.num_qubits();
    const int extra = q - main_qubits;
    if (extra < 0) throw CircuitError("main register wider than circuit");
    const std::uint64_t dim = std::uint64_t{1} << main_qubits;
    Eigen::MatrixXcd u(dim, dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        StateVector sv = init_basis(q, k << extra);
        apply_circuit(sv, circuit);
        double stray = 0.0;
        for (std::uint64_t j = 0; j < sv.dim(); ++j) {
            if ((j & ((std::uint64_t{1} << extra) - 1)) == 0)
                u(j >> extra, k) = sv.amplitudes[j];
            else
                stray += std::norm(sv.amplitudes[j]);
        }
        if (stray > 1e-10) throw CircuitError("circuit leaks amplitude into ancillas");
    }
    return u;
}

}  // namespace qsine
