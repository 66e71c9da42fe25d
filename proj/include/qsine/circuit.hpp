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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsine {

using cplx = std::complex<double>;

/// Bit ordering convention: qubit 0 is the MOST significant bit of a basis
/// index, so k = k_0 2^{q-1} + ... + k_{q-1} 2^0.
inline int bit_shift(int num_qubits, int qubit) { return num_qubits - 1 - qubit; }

enum class GateKind {
    H,
    X,
    S,
    Sdg,
    Phase,  ///< diag(1, e^{i*angle}); P_l gates use angle = 2*pi/2^l
    RY,
    U3,
    Swap,
    B,   ///< B = H * S
    Bdg  ///< B^dagger = Sdg * H
};

struct Control {
    int qubit;
    bool positive;  ///< true: filled circle (|1> control), false: empty circle
};

struct Gate {
    GateKind kind;
    int target = -1;
    int target2 = -1;  ///< second target, Swap only
    double theta = 0.0, phi = 0.0, lambda = 0.0;
    std::vector<Control> controls;

    bool is_two_target() const { return kind == GateKind::Swap; }
};

class CircuitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Ordered list of gate applications over a register of fixed width.
/// Circuits read left to right; the equivalent matrix product is reversed.
class Circuit {
  public:
    explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1)
            throw CircuitError("circuit needs at least one qubit");
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    void add(Gate g) {
        validate(g);
        gates_.push_back(std::move(g));
    }

    void append(const Circuit& other) {
        if (other.num_qubits_ != num_qubits_)
            throw CircuitError("appended circuit width mismatch");
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    }

    /// Appends `other` with its qubit i placed on this circuit's qubit map[i].
    void append_mapped(const Circuit& other, const std::vector<int>& map) {
        if (static_cast<int>(map.size()) != other.num_qubits_)
            throw CircuitError("qubit map size mismatch");
        for (Gate g : other.gates_) {
            g.target = map.at(g.target);
            if (g.target2 >= 0) g.target2 = map.at(g.target2);
            for (auto& c : g.controls) c.qubit = map.at(c.qubit);
            add(std::move(g));
        }
    }

    // builder helpers
    void h(int q) { add({GateKind::H, q}); }
    void x(int q) { add({GateKind::X, q}); }
    void s(int q) { add({GateKind::S, q}); }
    void sdg(int q) { add({GateKind::Sdg, q}); }
    void b(int q) { add({GateKind::B, q}); }
    void bdg(int q) { add({GateKind::Bdg, q}); }
    void phase(int q, double angle) {
        Gate g{GateKind::Phase, q};
        g.theta = angle;
        add(std::move(g));
    }
    void cphase(int control, int q, double angle) {
        Gate g{GateKind::Phase, q};
        g.theta = angle;
        g.controls = {{control, true}};
        add(std::move(g));
    }
    void ry(int q, double angle) {
        Gate g{GateKind::RY, q};
        g.theta = angle;
        add(std::move(g));
    }
    void cry(const std::vector<Control>& controls, int q, double angle) {
        Gate g{GateKind::RY, q};
        g.theta = angle;
        g.controls = controls;
        add(std::move(g));
    }
    void u3(int q, double theta, double phi, double lambda) {
        Gate g{GateKind::U3, q};
        g.theta = theta;
        g.phi = phi;
        g.lambda = lambda;
        add(std::move(g));
    }
    void cx(int control, int target) {
        Gate g{GateKind::X, target};
        g.controls = {{control, true}};
        add(std::move(g));
    }
    void toffoli(int c0, int c1, int target) {
        Gate g{GateKind::X, target};
        g.controls = {{c0, true}, {c1, true}};
        add(std::move(g));
    }
    void mcx(const std::vector<Control>& controls, int target) {
        Gate g{GateKind::X, target};
        g.controls = controls;
        add(std::move(g));
    }
    void swap(int a, int q) {
        Gate g{GateKind::Swap, a};
        g.target2 = q;
        add(std::move(g));
    }

    /// Reversed circuit with every gate replaced by its inverse.
    Circuit inverse() const {
        Circuit inv(num_qubits_);
        inv.gates_.reserve(gates_.size());
        for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
            Gate g = *it;
            switch (g.kind) {
                case GateKind::H:
                case GateKind::X:
                case GateKind::Swap:
                    break;  // involutions
                case GateKind::S:
                    g.kind = GateKind::Sdg;
                    break;
                case GateKind::Sdg:
                    g.kind = GateKind::S;
                    break;
                case GateKind::B:
                    g.kind = GateKind::Bdg;
                    break;
                case GateKind::Bdg:
                    g.kind = GateKind::B;
                    break;
                case GateKind::Phase:
                    g.theta = -g.theta;
                    break;
                case GateKind::RY:
                    g.theta = -g.theta;
                    break;
                case GateKind::U3: {
                    // U3(t,p,l)^-1 = U3(-t,-l,-p)
                    const double t = g.theta, p = g.phi, l = g.lambda;
                    g.theta = -t;
                    g.phi = -l;
                    g.lambda = -p;
                    break;
                }
            }
            inv.gates_.push_back(std::move(g));
        }
        return inv;
    }

  private:
    void validate(const Gate& g) const {
        auto check = [&](int q) {
            if (q < 0 || q >= num_qubits_)
                throw CircuitError("qubit index " + std::to_string(q) + " out of range");
        };
        check(g.target);
        std::vector<int> seen{g.target};
        if (g.is_two_target()) {
            check(g.target2);
            seen.push_back(g.target2);
        }
        for (const auto& c : g.controls) {
            check(c.qubit);
            seen.push_back(c.qubit);
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            for (std::size_t j = i + 1; j < seen.size(); ++j)
                if (seen[i] == seen[j])
                    throw CircuitError("duplicate qubit index in gate");
    }

    int num_qubits_;
    std::vector<Gate> gates_;
};

}  // namespace qsine
