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
#include "qsine/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsine {

namespace {

constexpr int kMaxSimQubits = 26;
constexpr double kLeakTol = 1e-10;

int log2_exact(std::uint64_t n) {
    int p = 0;
    while ((std::uint64_t{1} << p) < n) ++p;
    if ((std::uint64_t{1} << p) != n) throw SolverError("extended size must be a power of two");
    return p;
}

std::vector<int> block_map(int start, int n, int carry0, int carries) {
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), start);
    for (int a = 0; a < carries; ++a) map.push_back(carry0 + a);
    return map;
}

void check_forcing(const ProblemSpec& spec, const SpectralDiagonal& diag) {
    const std::uint64_t half = spec.n_extended / 2;
    const int n = log2_exact(spec.n_extended);
    if (spec.n_extended < 4) throw SolverError("extended size must be at least 4");
    if (diag.dim != spec.dim || diag.n != n)
        throw SolverError("diagonal does not match the problem dimensions");
    const std::uint64_t want = spec.dim == 1 ? half : half * half;
    if (static_cast<std::uint64_t>(spec.forcing.size()) != want)
        throw SolverError("forcing length does not match the physical grid");
    if (spec.dim == 1) {
        if (spec.forcing(0) != 0.0) throw SolverError("forcing must vanish at the boundary index");
    } else {
        for (std::uint64_t j = 0; j < half; ++j)
            if (spec.forcing(j) != 0.0 || spec.forcing(j * half) != 0.0)
                throw SolverError("forcing must vanish on the boundary indices");
    }
}

}  // namespace

SpectralDiagonal fitted_diagonal_1d(const ProblemSpec& spec, int degree,
                                    std::vector<std::int64_t> boundaries) {
    const int n = log2_exact(spec.n_extended);
    const std::int64_t half = static_cast<std::int64_t>(spec.n_extended / 2);
    Eigen::VectorXd fwd = spec.family == Family::Poisson
                              ? diagonal_poisson_1d(spec.n_extended, spec.length)
                              : diagonal_fractional_1d(spec.n_extended, spec.length, spec.kappa,
                                                       spec.beta, spec.tau);
    auto exact = [fwd, half](std::int64_t k) {
        return k >= 1 && k < half ? 1.0 / fwd(k) : 0.0;
    };
    return make_diagonal_1d(exact, n, degree, std::move(boundaries));
}

SpectralDiagonal fitted_diagonal_2d(const ProblemSpec& spec, int degree, std::int64_t k_split) {
    const int n = log2_exact(spec.n_extended);
    const std::int64_t big = static_cast<std::int64_t>(spec.n_extended);
    const std::int64_t half = big / 2;
    if (k_split < 1 || k_split > half) throw SolverError("k_split must lie in [1, N/2]");
    Eigen::MatrixXd inv =
        diagonal_2d(spec.family, spec.n_extended, spec.length, spec.kappa, spec.beta, spec.tau);
    std::vector<std::int64_t> boundaries;
    std::function<double(std::int64_t, std::int64_t)> exact;
    if (spec.family == Family::Poisson) {
        // one fitted cell near the origin, zero elsewhere
        exact = [inv, k_split](std::int64_t k0, std::int64_t k1) {
            return k0 < k_split && k1 < k_split ? inv(k0, k1) : 0.0;
        };
        boundaries = k_split == half ? std::vector<std::int64_t>{0, half, big}
                                     : std::vector<std::int64_t>{0, k_split, big};
    } else {
        exact = [inv, half](std::int64_t k0, std::int64_t k1) {
            return k0 < half && k1 < half ? inv(k0, k1) : 0.0;
        };
        boundaries = k_split == half ? std::vector<std::int64_t>{0, half, big}
                                     : std::vector<std::int64_t>{0, k_split, half, big};
    }
    return make_diagonal_2d(exact, n, degree, std::move(boundaries), /*interior_only=*/true);
}

SolverCircuit build_solver_circuit_1d(const SpectralDiagonal& diag, ShiftImpl impl) {
    if (diag.dim != 1) throw SolverError("1D solver needs a 1D diagonal");
    const int n = diag.n;
    const UpLayout lay = up_univariate_layout(diag, n);
    const int shift_carries = forward_shift_ancillas(n - 1, impl);
    const int carries = std::max(shift_carries, lay.carries);
    SolverCircuit sc;
    sc.dim = 1;
    sc.n = n;
    sc.shift_impl = impl;
    sc.flag_count = lay.flags;
    sc.carry_count = carries;
    const int total = 1 + n + lay.flags + carries;
    const int flag0 = 1 + n;
    const int carry0 = flag0 + lay.flags;
    sc.circuit = Circuit(total);

    const Circuit qst = build_qst(n, impl);
    const auto qst_map = block_map(1, n, carry0, shift_carries);
    sc.circuit.append_mapped(qst, qst_map);

    const Circuit up = build_up_univariate(diag, n);
    std::vector<int> up_map = block_map(1, n, carry0, 0);
    up_map.push_back(sc.rot);
    for (int i = 0; i < lay.flags; ++i) up_map.push_back(flag0 + i);
    for (int a = 0; a < lay.carries; ++a) up_map.push_back(carry0 + a);
    sc.circuit.append_mapped(up, up_map);

    sc.circuit.append_mapped(qst.inverse(), qst_map);
    return sc;
}

SolverCircuit build_solver_circuit_2d(const SpectralDiagonal& diag, ShiftImpl impl) {
    if (diag.dim != 2) throw SolverError("2D solver needs a 2D diagonal");
    const int n = diag.n;
    const UpLayout lay = up_bivariate_layout(diag, n);
    const int shift_carries = forward_shift_ancillas(n - 1, impl);
    const int carries = std::max(shift_carries, lay.carries);
    SolverCircuit sc;
    sc.dim = 2;
    sc.n = n;
    sc.shift_impl = impl;
    // axis-1 block sits above axis-0, matching the solver schematic
    sc.axis1_start = 1;
    sc.axis0_start = 1 + n;
    sc.flag_count = lay.flags;
    sc.carry_count = carries;
    const int total = 1 + 2 * n + lay.flags + carries;
    const int flag0 = 1 + 2 * n;
    const int carry0 = flag0 + lay.flags;
    sc.circuit = Circuit(total);

    const Circuit qst = build_qst(n, impl);
    const auto map1 = block_map(sc.axis1_start, n, carry0, shift_carries);
    const auto map0 = block_map(sc.axis0_start, n, carry0, shift_carries);
    sc.circuit.append_mapped(qst, map1);
    sc.circuit.append_mapped(qst, map0);

    const Circuit up = build_up_bivariate(diag, n);
    std::vector<int> up_map = block_map(sc.axis0_start, n, carry0, 0);
    for (int j = 0; j < n; ++j) up_map.push_back(sc.axis1_start + j);
    up_map.push_back(sc.rot);
    for (int i = 0; i < lay.flags; ++i) up_map.push_back(flag0 + i);
    for (int a = 0; a < lay.carries; ++a) up_map.push_back(carry0 + a);
    sc.circuit.append_mapped(up, up_map);

    const Circuit qst_inv = qst.inverse();
    sc.circuit.append_mapped(qst_inv, map0);
    sc.circuit.append_mapped(qst_inv, map1);
    return sc;
}

QuantumSolveResult quantum_solve(const ProblemSpec& spec, const SpectralDiagonal& diag,
                                 ShiftImpl impl) {
    check_forcing(spec, diag);
    const int n = diag.n;
    const std::uint64_t half = spec.n_extended / 2;
    const SolverCircuit sc =
        spec.dim == 1 ? build_solver_circuit_1d(diag, impl) : build_solver_circuit_2d(diag, impl);
    const int total = sc.circuit.num_qubits();
    if (total > kMaxSimQubits)
        throw SolverError("solver register of " + std::to_string(total) +
                          " qubits exceeds the simulator budget");

    const double norm = spec.forcing.norm();
    if (norm == 0.0) throw SolverError("forcing is identically zero");

    // embed the normalized forcing into the data qubits of the extended
    // blocks; the reflection ancillas are the block MSBs and stay |0> since
    // every physical index is below N/2
    StateVector state;
    state.num_qubits = total;
    state.amplitudes.assign(std::uint64_t{1} << total, cplx{0.0, 0.0});
    auto basis_index = [&](std::uint64_t j0, std::uint64_t j1) {
        if (spec.dim == 1) return j0 << (total - 1 - n);
        return (j1 << (total - 1 - n)) | (j0 << (total - 1 - 2 * n));
    };
    if (spec.dim == 1) {
        for (std::uint64_t j = 0; j < half; ++j)
            state.amplitudes[basis_index(j, 0)] = spec.forcing(j) / norm;
    } else {
        for (std::uint64_t j0 = 0; j0 < half; ++j0)
            for (std::uint64_t j1 = 0; j1 < half; ++j1)
                state.amplitudes[basis_index(j0, j1)] = spec.forcing(j0 * half + j1) / norm;
    }

    apply_circuit(state, sc.circuit);

    // every ancilla except the rotation qubit must return to |0>: reflection
    // ancillas because the data stays in the antisymmetric subspace, flags
    // and carries because they are uncomputed
    const std::uint64_t rot_bit = std::uint64_t{1} << (total - 1);
    const std::uint64_t data_mask =
        spec.dim == 1 ? basis_index(half - 1, 0) : basis_index(half - 1, half - 1);
    const std::uint64_t junk_mask = ~(rot_bit | data_mask) & ((std::uint64_t{1} << total) - 1);

    double leaked = 0.0, success = 0.0, max_imag = 0.0;
    for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
        const double p = std::norm(state.amplitudes[idx]);
        if ((idx & junk_mask) != 0)
            leaked += p;
        else if (idx & rot_bit)
            success += p;
    }
    if (leaked > kLeakTol) throw SolverError("ancillas leaked amplitude beyond tolerance");
    if (success < 1e-14) throw SolverError("degenerate postselection: empty success branch");

    QuantumSolveResult res;
    res.success_probability = success;
    // u = forcing_norm * inverse_diagonal_scale * raw branch amplitudes;
    // equivalently the product of all three factors times the unit-normalized
    // success branch
    res.scale_chain = {{"forcing_norm", norm},
                       {"inverse_diagonal_scale", 1.0 / diag.scale},
                       {"success_branch_norm", std::sqrt(success)}};
    const double factor = norm / diag.scale;
    res.u.resize(spec.forcing.size());
    for (std::uint64_t j0 = 0; j0 < half; ++j0) {
        const std::uint64_t cols = spec.dim == 1 ? 1 : half;
        for (std::uint64_t j1 = 0; j1 < cols; ++j1) {
            const cplx amp = state.amplitudes[rot_bit | basis_index(j0, j1)];
            max_imag = std::max(max_imag, std::abs(amp.imag()));
            res.u(j0 * cols + j1) = amp.real() * factor;
        }
    }
    if (max_imag > kLeakTol) throw SolverError("success branch acquired a complex phase");
    return res;
}

Eigen::VectorXd classical_solve_fitted(const ProblemSpec& spec, const SpectralDiagonal& diag) {
    const std::uint64_t half = spec.n_extended / 2;
    check_forcing(spec, diag);
    if (spec.dim == 1) {
        Eigen::VectorXd dinv(half);
        for (std::uint64_t k = 0; k < half; ++k)
            dinv(k) = std::sin(diag.fit1.eval(static_cast<std::int64_t>(k))) / diag.scale;
        return solve_folded_1d(spec.forcing, dinv);
    }
    Eigen::MatrixXd dinv(half, half);
    for (std::uint64_t k0 = 0; k0 < half; ++k0)
        for (std::uint64_t k1 = 0; k1 < half; ++k1)
            dinv(k0, k1) = std::sin(diag.fit2.eval(static_cast<std::int64_t>(k0),
                                                   static_cast<std::int64_t>(k1))) /
                           diag.scale;
    Eigen::MatrixXd f(half, half);
    for (std::uint64_t j0 = 0; j0 < half; ++j0)
        for (std::uint64_t j1 = 0; j1 < half; ++j1) f(j0, j1) = spec.forcing(j0 * half + j1);
    const Eigen::MatrixXd u = solve_folded_2d(f, dinv);
    Eigen::VectorXd out(half * half);
    for (std::uint64_t j0 = 0; j0 < half; ++j0)
        for (std::uint64_t j1 = 0; j1 < half; ++j1) out(j0 * half + j1) = u(j0, j1);
    return out;
}

std::vector<Eigen::VectorXd> sample_random_field_quantum(const ProblemSpec& spec,
                                                         const SpectralDiagonal& diag,
                                                         int n_samples, std::uint64_t seed,
                                                         ShiftImpl impl) {
    if (spec.family != Family::Fractional)
        throw SolverError("random fields require the fractional family");
    const std::uint64_t half = spec.n_extended / 2;
    const std::uint64_t count = spec.dim == 1 ? half : half * half;
    std::vector<Eigen::VectorXd> samples;
    samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        ProblemSpec draw = spec;
        draw.forcing =
            sample_white_noise(count, spec.tau, seed + static_cast<std::uint64_t>(i) * 0x9e3779b9);
        if (spec.dim == 2)
            for (std::uint64_t j = 0; j < half; ++j) {
                draw.forcing(j) = 0.0;
                draw.forcing(j * half) = 0.0;
            }
        samples.push_back(quantum_solve(draw, diag, impl).u);
    }
    return samples;
}

}  // namespace qsine
