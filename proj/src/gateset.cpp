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
#include "qsine/gateset.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace qsine {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2cd u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    Eigen::Matrix2cd m;
    m << cplx{c, 0.0}, -std::exp(cplx{0.0, lambda}) * s,
        std::exp(cplx{0.0, phi}) * s, std::exp(cplx{0.0, phi + lambda}) * c;
    return m;
}

// Principal square root of a 2x2 unitary.
Eigen::Matrix2cd unitary_sqrt(const Eigen::Matrix2cd& u) {
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(u);
    Eigen::Vector2cd ev = es.eigenvalues();
    Eigen::Matrix2cd p = es.eigenvectors();
    Eigen::Matrix2cd v =
        p * Eigen::Vector2cd(std::sqrt(ev(0)), std::sqrt(ev(1))).asDiagonal() * p.inverse();
    if ((v * v - u).cwiseAbs().maxCoeff() > 1e-9)
        throw TranspileError("square root of gate matrix failed");
    return v;
}

// Emitter shared between transpile (lowered=true, output restricted to
// {CNOT, U3}) and decompose_mcx (lowered=false, Toffoli and controlled
// single-qubit gates stay whole).
class Emitter {
  public:
    Emitter(Circuit& out, bool lowered) : out_(out), lowered_(lowered) {}

    void u3(int q, double theta, double phi, double lambda) { out_.u3(q, theta, phi, lambda); }
    void cx(int c, int t) { out_.cx(c, t); }

    void toffoli(int c0, int c1, int t) {
        if (!lowered_) {
            out_.toffoli(c0, c1, t);
            return;
        }
        const double qt = kPi / 4.0;
        auto tg = [&](int q, double a) { out_.u3(q, 0.0, 0.0, a); };
        out_.u3(t, kPi / 2.0, 0.0, kPi);
        out_.cx(c1, t);
        tg(t, -qt);
        out_.cx(c0, t);
        tg(t, qt);
        out_.cx(c1, t);
        tg(t, -qt);
        out_.cx(c0, t);
        tg(t, qt);
        tg(c1, qt);
        out_.u3(t, kPi / 2.0, 0.0, kPi);
        out_.cx(c0, c1);
        tg(c0, qt);
        tg(c1, -qt);
        out_.cx(c0, c1);
    }

    // Exact controlled-U: phase-corrected two-CNOT network. Nothing leaks
    // into the control-off branch, so this stays valid inside recursions.
    void cu(int c, int t, const Eigen::Matrix2cd& u) {
        const U3Params p = u3_params(u);
        if (!lowered_) {
            Gate g{GateKind::U3, t};
            g.theta = p.theta;
            g.phi = p.phi;
            g.lambda = p.lambda;
            g.controls = {{c, true}};
            out_.add(std::move(g));
            if (std::abs(p.delta) > 1e-14) out_.phase(c, p.delta);
            return;
        }
        // U = e^{i delta} e^{i(phi+lambda)/2} Rz(phi) Ry(theta) Rz(lambda);
        // the A X B X C product below yields the bare Rz Ry Rz factor with
        // A B C = I, so the control line absorbs the remaining phase.
        out_.u3(t, 0.0, 0.0, (p.lambda - p.phi) / 2.0);
        out_.cx(c, t);
        out_.u3(t, -p.theta / 2.0, 0.0, -(p.phi + p.lambda) / 2.0);
        out_.cx(c, t);
        out_.u3(t, p.theta / 2.0, p.phi, 0.0);
        out_.u3(c, 0.0, 0.0, p.delta + (p.phi + p.lambda) / 2.0);
    }

    // Multi-controlled X. Linear cost with borrowed qubits in arbitrary
    // states; quadratic square-root recursion when none are available.
    void mcx(const std::vector<int>& c, int t, const std::vector<int>& dirty) {
        const int m = static_cast<int>(c.size());
        if (m == 0) {
            if (lowered_)
                out_.u3(t, kPi, 0.0, kPi);
            else
                out_.x(t);
            return;
        }
        if (m == 1) {
            out_.cx(c[0], t);
            return;
        }
        if (m == 2) {
            toffoli(c[0], c[1], t);
            return;
        }
        if (static_cast<int>(dirty.size()) >= m - 2) {
            // doubled v-chain on borrowed qubits a[0..m-3]
            auto half = [&] {
                toffoli(c[m - 1], dirty[m - 3], t);
                for (int i = m - 2; i >= 2; --i) toffoli(c[i], dirty[i - 2], dirty[i - 1]);
                toffoli(c[0], c[1], dirty[0]);
                for (int i = 2; i <= m - 2; ++i) toffoli(c[i], dirty[i - 2], dirty[i - 1]);
            };
            half();
            half();
            return;
        }
        if (!dirty.empty()) {
            // split across one borrowed qubit; each part then has enough
            // borrowed qubits from the opposite half
            const int a = dirty[0];
            const int m1 = (m + 1) / 2;
            std::vector<int> first(c.begin(), c.begin() + m1);
            std::vector<int> rest(c.begin() + m1, c.end());
            std::vector<int> rest_a = rest;
            rest_a.push_back(a);
            mcx(rest_a, t, first);
            mcx(first, a, rest_a_dirty(rest, t));
            mcx(rest_a, t, first);
            mcx(first, a, rest_a_dirty(rest, t));
            return;
        }
        Eigen::Matrix2cd x;
        x << 0, 1, 1, 0;
        mcu(c, t, x, {});
    }

    // Multi-controlled single-qubit unitary via repeated square roots; the
    // target doubles as a borrowed qubit for the inner multi-controlled X.
    void mcu(const std::vector<int>& c, int t, const Eigen::Matrix2cd& u,
             const std::vector<int>& dirty) {
        const int m = static_cast<int>(c.size());
        if (m == 0) {
            const U3Params p = u3_params(u);
            u3(t, p.theta, p.phi, p.lambda);  // global phase dropped
            return;
        }
        if (m == 1) {
            cu(c[0], t, u);
            return;
        }
        const Eigen::Matrix2cd v = unitary_sqrt(u);
        const int clast = c[m - 1];
        std::vector<int> head(c.begin(), c.end() - 1);
        std::vector<int> dirty_t = dirty;
        dirty_t.push_back(t);
        std::vector<int> dirty_c = dirty;
        dirty_c.push_back(clast);
        cu(clast, t, v);
        mcx(head, clast, dirty_t);
        cu(clast, t, v.adjoint());
        mcx(head, clast, dirty_t);
        mcu(head, t, v, dirty_c);
    }

  private:
    static std::vector<int> rest_a_dirty(const std::vector<int>& rest, int t) {
        std::vector<int> d = rest;
        d.push_back(t);
        return d;
    }

    Circuit& out_;
    bool lowered_;
};

}  // namespace

Eigen::Matrix2cd gate_matrix(GateKind kind, double theta, double phi, double lambda) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    Eigen::Matrix2cd m;
    switch (kind) {
        case GateKind::H:
            m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
            return m;
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        case GateKind::S:
            m << 1, 0, 0, cplx{0.0, 1.0};
            return m;
        case GateKind::Sdg:
            m << 1, 0, 0, cplx{0.0, -1.0};
            return m;
        case GateKind::Phase:
            m << 1, 0, 0, std::exp(cplx{0.0, theta});
            return m;
        case GateKind::RY: {
            const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
            m << c, -s, s, c;
            return m;
        }
        case GateKind::U3:
            return u3_matrix(theta, phi, lambda);
        case GateKind::B:
            m << inv_sqrt2, cplx{0.0, inv_sqrt2}, inv_sqrt2, cplx{0.0, -inv_sqrt2};
            return m;
        case GateKind::Bdg:
            m << inv_sqrt2, inv_sqrt2, cplx{0.0, -inv_sqrt2}, cplx{0.0, inv_sqrt2};
            return m;
        case GateKind::Swap:
            break;
    }
    throw TranspileError("gate kind has no single-qubit matrix");
}

Eigen::Matrix2cd gate_matrix(const Gate& gate) {
    return gate_matrix(gate.kind, gate.theta, gate.phi, gate.lambda);
}

U3Params u3_params(const Eigen::Matrix2cd& u) {
    if ((u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-9)
        throw TranspileError("u3_params requires a unitary matrix");
    const double a00 = std::abs(u(0, 0)), a10 = std::abs(u(1, 0));
    U3Params p{};
    p.theta = 2.0 * std::atan2(a10, a00);
    if (a10 < 1e-12) {
        p.delta = std::arg(u(0, 0));
        p.phi = 0.0;
        p.lambda = std::arg(u(1, 1)) - p.delta;
    } else if (a00 < 1e-12) {
        p.delta = 0.0;
        p.phi = std::arg(u(1, 0));
        p.lambda = std::arg(-u(0, 1));
    } else {
        p.delta = std::arg(u(0, 0));
        p.phi = std::arg(u(1, 0)) - p.delta;
        p.lambda = std::arg(-u(0, 1)) - p.delta;
    }
    return p;
}

Circuit transpile(const Circuit& circuit) {
    const int q = circuit.num_qubits();
    Circuit out(q);
    Emitter em(out, true);

    for (const Gate& gate : circuit.gates()) {
        std::vector<bool> used(q, false);
        used[gate.target] = true;
        if (gate.target2 >= 0) used[gate.target2] = true;
        std::vector<int> controls;
        std::vector<int> flips;
        for (const auto& c : gate.controls) {
            used[c.qubit] = true;
            controls.push_back(c.qubit);
            if (!c.positive) flips.push_back(c.qubit);
        }
        std::vector<int> dirty;
        for (int i = 0; i < q; ++i)
            if (!used[i]) dirty.push_back(i);

        for (int f : flips) em.u3(f, kPi, 0.0, kPi);

        if (gate.kind == GateKind::Swap) {
            const int a = gate.target, b = gate.target2;
            if (controls.empty()) {
                em.cx(a, b);
                em.cx(b, a);
                em.cx(a, b);
            } else {
                std::vector<int> cs = controls;
                cs.push_back(a);
                em.cx(b, a);
                em.mcx(cs, b, dirty);
                em.cx(b, a);
            }
        } else if (gate.kind == GateKind::X) {
            em.mcx(controls, gate.target, dirty);
        } else {
            const Eigen::Matrix2cd u = gate_matrix(gate);
            em.mcu(controls, gate.target, u, dirty);
        }

        for (int f : flips) em.u3(f, kPi, 0.0, kPi);
    }
    return out;
}

Circuit decompose_mcx(int num_controls, int ancilla_budget) {
    const int m = num_controls;
    if (m < 1) throw TranspileError("decompose_mcx needs at least one control");
    if (ancilla_budget < 0) throw TranspileError("negative ancilla budget");
    Circuit out(m + 1 + ancilla_budget);
    Emitter em(out, false);
    const int t = m;

    if (m <= 2 || ancilla_budget >= m - 2) {
        if (m == 1) {
            out.cx(0, t);
        } else if (m == 2) {
            out.toffoli(0, 1, t);
        } else {
            // clean v-chain: compute carries, flip target, uncompute
            auto anc = [&](int i) { return m + 1 + i; };
            out.toffoli(0, 1, anc(0));
            for (int i = 2; i <= m - 2; ++i) out.toffoli(i, anc(i - 2), anc(i - 1));
            out.toffoli(m - 1, anc(m - 3), t);
            for (int i = m - 2; i >= 2; --i) out.toffoli(i, anc(i - 2), anc(i - 1));
            out.toffoli(0, 1, anc(0));
        }
        return out;
    }

    // not enough clean ancillas for the v-chain: ancilla-free recursion
    std::vector<int> controls(m);
    for (int i = 0; i < m; ++i) controls[i] = i;
    em.mcx(controls, t, {});
    return out;
}

GateCount count_gates(const Circuit& circuit, int num_ancilla) {
    GateCount gc;
    gc.num_ancilla = num_ancilla;
    for (const Gate& g : circuit.gates()) {
        if (g.kind == GateKind::U3 && g.controls.empty()) {
            ++gc.u3_count;
        } else if (g.kind == GateKind::X && g.controls.size() == 1 && g.controls[0].positive) {
            ++gc.cnot_count;
        } else {
            throw TranspileError("count_gates expects a transpiled circuit");
        }
    }
    gc.total = gc.cnot_count + gc.u3_count;
    return gc;
}

}  // namespace qsine
