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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "qsine/gateset.hpp"
#include "qsine/statevector.hpp"

using namespace qsine;

namespace {

StateVector random_state(int q, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<cplx> v(std::size_t{1} << q);
    for (auto& a : v) a = cplx{nd(rng), nd(rng)};
    return load_amplitudes(q, v).state;
}

}  // namespace

TEST_CASE("bit ordering: qubit 0 is the most significant bit") {
    CHECK(bit_shift(4, 0) == 3);
    CHECK(bit_shift(4, 3) == 0);

    // X on qubit 0 of a 3-qubit register maps |000> to |100> = index 4
    StateVector sv = init_basis(3, 0);
    Circuit c(3);
    c.x(0);
    apply_circuit(sv, c);
    CHECK(std::abs(sv.amplitudes[4] - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("basis init and amplitude loading") {
    StateVector sv = init_basis(2, 3);
    CHECK(sv.dim() == 4);
    CHECK(sv.amplitudes[3] == cplx{1.0, 0.0});
    CHECK(sv.norm() == doctest::Approx(1.0));

    auto loaded = load_amplitudes(2, {{3.0, 0.0}, {0.0, 4.0}, {0.0, 0.0}, {0.0, 0.0}});
    CHECK(loaded.norm_factor == doctest::Approx(5.0));
    CHECK(loaded.state.norm() == doctest::Approx(1.0));
    CHECK(std::abs(loaded.state.amplitudes[0] - cplx{0.6, 0.0}) < 1e-15);

    CHECK_THROWS(load_amplitudes(2, {{1.0, 0.0}}));
    CHECK_THROWS(load_amplitudes(1, {{0.0, 0.0}, {0.0, 0.0}}));
}

TEST_CASE("single-qubit gates match their matrices on random states") {
    const int q = 5;
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::uniform_int_distribution<int> pick(0, q - 1);

    std::vector<GateKind> kinds{GateKind::H,  GateKind::X,     GateKind::S,
                                GateKind::Sdg, GateKind::Phase, GateKind::RY,
                                GateKind::U3, GateKind::B,     GateKind::Bdg};
    for (GateKind kind : kinds) {
        Gate g{kind, pick(rng)};
        g.theta = ang(rng);
        g.phi = ang(rng);
        g.lambda = ang(rng);

        StateVector sv = random_state(q, 7);
        Eigen::VectorXcd ref(sv.dim());
        for (std::uint64_t i = 0; i < sv.dim(); ++i) ref(i) = sv.amplitudes[i];

        // dense reference: U acting on the target bit position
        const Eigen::Matrix2cd u = gate_matrix(g);
        const int pt = bit_shift(q, g.target);
        Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(sv.dim());
        for (std::uint64_t i = 0; i < sv.dim(); ++i) {
            const int b = (i >> pt) & 1;
            const std::uint64_t base = i & ~(std::uint64_t{1} << pt);
            expect(base) += u(0, b) * ref(i);
            expect(base | (std::uint64_t{1} << pt)) += u(1, b) * ref(i);
        }

        apply_gate(sv, g);
        for (std::uint64_t i = 0; i < sv.dim(); ++i)
            CHECK(std::abs(sv.amplitudes[i] - expect(i)) < 1e-13);
    }
}

TEST_CASE("controls gate the action on the correct basis branches") {
    // CX(0 -> 2) on |101>: control is 1, target flips -> |100>
    StateVector sv = init_basis(3, 0b101);
    Circuit c(3);
    c.cx(0, 2);
    apply_circuit(sv, c);
    CHECK(std::abs(sv.amplitudes[0b100] - cplx{1.0, 0.0}) < 1e-15);

    // open control: X on qubit 1 applied only when qubit 0 is |0>
    StateVector sv2 = init_basis(2, 0b00);
    Gate g{GateKind::X, 1};
    g.controls = {{0, false}};
    apply_gate(sv2, g);
    CHECK(std::abs(sv2.amplitudes[0b01] - cplx{1.0, 0.0}) < 1e-15);

    StateVector sv3 = init_basis(2, 0b10);
    apply_gate(sv3, g);
    CHECK(std::abs(sv3.amplitudes[0b10] - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("toffoli truth table") {
    for (std::uint64_t k = 0; k < 8; ++k) {
        StateVector sv = init_basis(3, k);
        Circuit c(3);
        c.toffoli(0, 1, 2);
        apply_circuit(sv, c);
        const std::uint64_t expect = ((k >> 2) & 1) && ((k >> 1) & 1) ? k ^ 1 : k;
        CHECK(std::abs(sv.amplitudes[expect] - cplx{1.0, 0.0}) < 1e-15);
    }
}

TEST_CASE("swap exchanges qubit values, also under controls") {
    for (std::uint64_t k = 0; k < 8; ++k) {
        StateVector sv = init_basis(3, k);
        Circuit c(3);
        c.swap(0, 2);
        apply_circuit(sv, c);
        const std::uint64_t b0 = (k >> 2) & 1, b2 = k & 1;
        const std::uint64_t expect = (k & 0b010) | (b2 << 2) | b0;
        CHECK(std::abs(sv.amplitudes[expect] - cplx{1.0, 0.0}) < 1e-15);
    }

    Gate g{GateKind::Swap, 1};
    g.target2 = 2;
    g.controls = {{0, true}};
    StateVector off = init_basis(3, 0b001);
    apply_gate(off, g);
    CHECK(std::abs(off.amplitudes[0b001] - cplx{1.0, 0.0}) < 1e-15);
    StateVector on = init_basis(3, 0b101);
    apply_gate(on, g);
    CHECK(std::abs(on.amplitudes[0b110] - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("norm preservation and linearity on random circuits") {
    const int q = 6;
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::uniform_int_distribution<int> pick(0, q - 1);

    Circuit c(q);
    for (int i = 0; i < 60; ++i) {
        const int t = pick(rng);
        int ctl = pick(rng);
        while (ctl == t) ctl = pick(rng);
        switch (i % 5) {
            case 0: c.h(t); break;
            case 1: c.ry(t, ang(rng)); break;
            case 2: c.cx(ctl, t); break;
            case 3: c.cphase(ctl, t, ang(rng)); break;
            case 4: c.u3(t, ang(rng), ang(rng), ang(rng)); break;
        }
    }

    StateVector a = random_state(q, 1);
    StateVector b = random_state(q, 2);
    const cplx wa{0.3, 0.4}, wb{-0.7, 0.2};
    StateVector mix;
    mix.num_qubits = q;
    mix.amplitudes.resize(a.dim());
    for (std::uint64_t i = 0; i < a.dim(); ++i)
        mix.amplitudes[i] = wa * a.amplitudes[i] + wb * b.amplitudes[i];

    apply_circuit(a, c);
    apply_circuit(b, c);
    apply_circuit(mix, c);
    CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::uint64_t i = 0; i < a.dim(); ++i)
        CHECK(std::abs(mix.amplitudes[i] - (wa * a.amplitudes[i] + wb * b.amplitudes[i])) <
              1e-12);
}

TEST_CASE("circuit inverse composes to identity") {
    const int q = 4;
    Circuit c(q);
    c.h(0);
    c.b(1);
    c.bdg(2);
    c.s(3);
    c.sdg(0);
    c.cphase(0, 2, 0.7);
    c.ry(1, -1.2);
    c.u3(2, 0.4, 1.1, -0.9);
    c.swap(1, 3);
    c.toffoli(0, 1, 2);

    StateVector sv = random_state(q, 9);
    const std::vector<cplx> before = sv.amplitudes;
    apply_circuit(sv, c);
    apply_circuit(sv, c.inverse());
    for (std::uint64_t i = 0; i < sv.dim(); ++i)
        CHECK(std::abs(sv.amplitudes[i] - before[i]) < 1e-12);
}

TEST_CASE("circuit_unitary is unitary and matches gate application") {
    Circuit c(3);
    c.h(0);
    c.cx(0, 1);
    c.cphase(1, 2, std::numbers::pi / 3.0);
    const Eigen::MatrixXcd u = circuit_unitary(c);
    CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-13);

    StateVector sv = random_state(3, 5);
    Eigen::VectorXcd v(8);
    for (int i = 0; i < 8; ++i) v(i) = sv.amplitudes[i];
    apply_circuit(sv, c);
    const Eigen::VectorXcd w = u * v;
    for (int i = 0; i < 8; ++i) CHECK(std::abs(sv.amplitudes[i] - w(i)) < 1e-13);
}

TEST_CASE("validation rejects malformed gates") {
    Circuit c(2);
    CHECK_THROWS_AS(c.h(2), CircuitError);
    CHECK_THROWS_AS(c.cx(0, 0), CircuitError);
    Gate g{GateKind::X, 1};
    g.controls = {{0, true}, {0, false}};
    CHECK_THROWS_AS(c.add(g), CircuitError);
    Circuit other(3);
    CHECK_THROWS_AS(c.append(other), CircuitError);
}
