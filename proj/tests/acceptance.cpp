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

// Acceptance runner: prints one [PASS]/[FAIL] line per criterion with pinned
// tolerances and exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qsine/experiments.hpp"
#include "qsine/gateset.hpp"
#include "qsine/qft.hpp"

using namespace qsine;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void run_criterion(int index, const std::string& name, double limit_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%.1fs/%.0fs)%s%s\n", ok ? "PASS" : "FAIL", index,
                name.c_str(), seconds, limit_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// success and reference amplitudes of the univariate encoder for basis |k>
std::pair<cplx, cplx> encoder_branches(const Circuit& c, int n, std::uint64_t k) {
    const int q = c.num_qubits();
    StateVector sv = init_basis(q, k << (q - n));
    apply_circuit(sv, c);
    const std::uint64_t base = k << (q - n);
    const std::uint64_t rot_bit = std::uint64_t{1} << (q - 1 - n);
    double stray = 0.0;
    for (std::uint64_t j = 0; j < sv.dim(); ++j)
        if (j != base && j != (base | rot_bit)) stray += std::norm(sv.amplitudes[j]);
    if (stray > 1e-20) throw std::runtime_error("encoder leaked outside the rotation branches");
    return {sv.amplitudes[base | rot_bit], sv.amplitudes[base]};
}

Eigen::VectorXd random_forcing(std::uint64_t half, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXd f(half);
    f(0) = 0.0;
    for (std::uint64_t j = 1; j < half; ++j) f(j) = normal(rng);
    return f;
}

Circuit random_circuit(int qubits, std::size_t gates, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_kind(0, 9);
    std::uniform_int_distribution<int> pick_qubit(0, qubits - 1);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    const GateKind kinds[] = {GateKind::H,  GateKind::X,  GateKind::S,    GateKind::Sdg,
                              GateKind::B,  GateKind::Bdg, GateKind::Phase, GateKind::RY,
                              GateKind::U3, GateKind::Swap};
    Circuit c(qubits);
    while (c.size() < gates) {
        Gate g{kinds[pick_kind(rng)], pick_qubit(rng)};
        g.theta = angle(rng);
        g.phi = angle(rng);
        g.lambda = angle(rng);
        if (g.kind == GateKind::Swap) {
            g.target2 = pick_qubit(rng);
            if (g.target2 == g.target) continue;
        }
        const int n_controls = std::uniform_int_distribution<int>(0, 2)(rng);
        bool clash = false;
        for (int i = 0; i < n_controls; ++i) {
            const int q = pick_qubit(rng);
            if (q == g.target || q == g.target2) clash = true;
            for (const auto& ctl : g.controls)
                if (ctl.qubit == q) clash = true;
            g.controls.push_back({q, (rng() & 1) != 0});
        }
        if (clash) continue;
        c.add(std::move(g));
    }
    return c;
}

bool criterion_qft(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n)
        worst = std::max(
            worst, max_abs(circuit_unitary(build_qft(n)) - dft_matrix(std::uint64_t{1} << n)));
    detail = "max deviation " + std::to_string(worst);
    return worst <= 1e-10;
}

bool criterion_reflection(std::string& detail) {
    double worst = 0.0;
    for (int n = 3; n <= 5; ++n) {
        const std::uint64_t big = std::uint64_t{1} << n;
        const Eigen::MatrixXcd want = expected_reflection_unitary(big);
        const Eigen::MatrixXd r = build_reflection_matrix(big);
        for (const ShiftImpl impl : {ShiftImpl::Mcx, ShiftImpl::RippleCarry}) {
            const ReflectionCircuit rc = build_reflection_unitary(n, impl);
            const Eigen::MatrixXcd got = main_register_unitary(rc.circuit, n);
            worst = std::max(worst, max_abs(got - want));
            // physical-data columns act as (i/sqrt(2)) R; column 0 is the
            // documented swap with |N/2> and is never excited by the solver
            const Eigen::MatrixXcd data_cols = got.leftCols(big / 2).rightCols(big / 2 - 1);
            const Eigen::MatrixXcd r_cols =
                cplx{0.0, 1.0 / std::sqrt(2.0)} * r.rightCols(big / 2 - 1);
            worst = std::max(worst, max_abs(data_cols - r_cols));
        }
    }
    detail = "max deviation " + std::to_string(worst);
    return worst <= 1e-10;
}

bool criterion_shift(std::string& detail) {
    for (int m = 2; m <= 6; ++m)
        for (const ShiftImpl impl : {ShiftImpl::Mcx, ShiftImpl::RippleCarry}) {
            const Circuit c = build_forward_shift(m, impl);
            const int q = c.num_qubits();
            const std::uint64_t big = std::uint64_t{1} << m;
            for (std::uint64_t k = 0; k < big; ++k) {
                StateVector sv = init_basis(q, k << (q - m));
                apply_circuit(sv, c);
                const std::uint64_t want = ((k + 1) % big) << (q - m);
                if (std::abs(sv.amplitudes[want] - 1.0) > 1e-12) {
                    detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
    return true;
}

bool criterion_gatecounts(std::string& detail) {
    long mcx_totals[11], ripple_totals[11];
    for (int m = 2; m <= 10; ++m) {
        mcx_totals[m] = count_gates(transpile(build_forward_shift(m, ShiftImpl::Mcx))).total;
        ripple_totals[m] =
            count_gates(transpile(build_forward_shift(m, ShiftImpl::RippleCarry))).total;
    }
    int m_star = 11;
    for (int m = 10; m >= 2 && ripple_totals[m] < mcx_totals[m]; --m) m_star = m;
    std::vector<double> ns, mcx_counts, ripple_counts;
    for (int n = 3; n <= 10; ++n) {
        ns.push_back(double(n));
        for (const ShiftImpl impl : {ShiftImpl::Mcx, ShiftImpl::RippleCarry}) {
            const ReflectionCircuit rc = build_reflection_unitary(n, impl);
            const long total = count_gates(transpile(rc.circuit), rc.ancilla_count).total;
            (impl == ShiftImpl::Mcx ? mcx_counts : ripple_counts).push_back(double(total));
        }
    }
    const double exp_ripple = fit_scaling_exponent(ns, ripple_counts);
    const double exp_mcx = fit_scaling_exponent(ns, mcx_counts);
    detail = "m*=" + std::to_string(m_star) + ", ripple exponent " + std::to_string(exp_ripple) +
             " (mcx " + std::to_string(exp_mcx) + ")";
    return m_star <= 6 && exp_ripple <= 4.0;
}

bool criterion_encoding(std::string& detail) {
    // quadratic instance: the four emitted rotation angles in closed form
    const double a0 = 0.11, a1 = 0.07, a2 = 0.031;
    Eigen::VectorXd coeffs(3);
    coeffs << a0, a1, a2;
    const auto angles = multinomial_angles(coeffs, 2);
    const struct {
        std::vector<int> subset;
        double want;
    } cases[] = {{{}, 2 * a0},
                 {{0}, 4 * a1 + 8 * a2},
                 {{1}, 2 * a1 + 2 * a2},
                 {{0, 1}, 8 * a2}};
    for (const auto& c : cases)
        if (std::abs(2.0 * angles.at(c.subset) - c.want) > 1e-12) {
            detail = "closed-form angle mismatch";
            return false;
        }

    // arbitrary fitted piecewise polynomial, amplitudes equal sin(poly(k))
    const int n = 5;
    auto f = [](std::int64_t k) {
        return 0.9 / (1.0 + 0.2 * double(k) + 0.01 * double(k) * double(k));
    };
    const SpectralDiagonal diag = make_diagonal_1d(f, n, 3, {0, 4, 16, 32});
    const Circuit up = build_up_univariate(diag, n);
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 32; ++k) {
        const auto [one, zero] = encoder_branches(up, n, k);
        const double theta = diag.fit1.eval(std::int64_t(k));
        worst = std::max(worst, std::abs(one - cplx{std::sin(theta), 0.0}));
        worst = std::max(worst, std::abs(zero - cplx{std::cos(theta), 0.0}));
    }
    detail = "max amplitude deviation " + std::to_string(worst);
    return worst <= 1e-12;
}

bool criterion_equivalence(std::string& detail) {
    double worst = 0.0;
    {
        ProblemSpec spec = poisson1d_problem(128);
        worst = std::max(worst, (quantum_solve(spec, fitted_diagonal_1d(spec, 4)).u -
                                 classical_solve_fitted(spec, fitted_diagonal_1d(spec, 4)))
                                    .cwiseAbs()
                                    .maxCoeff());
        ProblemSpec frac = fractional1d_problem(128, 1.5);
        frac.forcing = random_forcing(128, 11);
        const SpectralDiagonal diag = fitted_diagonal_1d(frac, 3);
        worst = std::max(worst, (quantum_solve(frac, diag).u -
                                 classical_solve_fitted(frac, diag))
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    {
        const LiftedProblem lifted = poisson2d_problem(32);
        const SpectralDiagonal diag = fitted_diagonal_2d(lifted.homogeneous, 4, 8);
        worst = std::max(worst, (quantum_solve(lifted.homogeneous, diag).u -
                                 classical_solve_fitted(lifted.homogeneous, diag))
                                    .cwiseAbs()
                                    .maxCoeff());
        ProblemSpec frac = fractional2d_problem(32);
        frac.forcing = random_forcing(32 * 32, 12);
        for (std::uint64_t j = 0; j < 32; ++j) frac.forcing(j) = frac.forcing(j * 32) = 0.0;
        const SpectralDiagonal diag2 = fitted_diagonal_2d(frac, 3, 8);
        worst = std::max(worst, (quantum_solve(frac, diag2).u -
                                 classical_solve_fitted(frac, diag2))
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    detail = "max elementwise deviation " + std::to_string(worst);
    return worst <= 1e-9;
}

std::pair<std::vector<double>, std::vector<double>> poisson1d_sweep(std::uint64_t n_max, int p) {
    std::vector<double> classical, quantum;
    for (std::uint64_t n = 16; n <= n_max; n *= 2) {
        const ProblemSpec spec = poisson1d_problem(n);
        Eigen::VectorXd exact(n);
        for (std::uint64_t j = 0; j < n; ++j) exact(j) = poisson1d_exact(double(j) / double(n));
        classical.push_back(relative_l2(solve_classical(spec).u, exact));
        const SpectralDiagonal diag = fitted_diagonal_1d(spec, p);
        quantum.push_back(relative_l2(quantum_solve(spec, diag, ShiftImpl::Mcx).u, exact));
    }
    return {classical, quantum};
}

bool criterion_convergence_1d(std::string& detail) {
    const auto [c3, q3] = poisson1d_sweep(1024, 3);
    const auto [c4, q4] = poisson1d_sweep(1024, 4);
    for (std::size_t i = 1; i < c3.size(); ++i)
        if (c3[i] >= c3[i - 1]) {
            detail = "classical error not strictly decreasing";
            return false;
        }
    // quantum tracks classical on coarse grids, then plateaus
    if (std::abs(q3.front() - c3.front()) / c3.front() > 0.1 ||
        std::abs(q4.front() - c4.front()) / c4.front() > 0.1) {
        detail = "quantum error does not track classical at n=16";
        return false;
    }
    const double plateau3 = q3.back(), plateau4 = q4.back();
    detail = "plateaus p3=" + std::to_string(plateau3) + " p4=" + std::to_string(plateau4);
    if (plateau4 > plateau3) return false;
    // regression baselines recorded from the first run (geometric partition)
    const double base3 = 2.3135e-4, base4 = 3.6309e-5;
    return plateau3 > 0.5 * base3 && plateau3 < 2.0 * base3 && plateau4 > 0.5 * base4 &&
           plateau4 < 2.0 * base4;
}

bool criterion_inhomogeneous(std::string& detail) {
    std::vector<double> classical, q3, q4;
    for (std::uint64_t n = 16; n <= 512; n *= 2) {
        const LiftedProblem lifted = poisson1d_inhom_problem(n);
        Eigen::VectorXd exact(n);
        for (std::uint64_t j = 0; j < n; ++j)
            exact(j) = poisson1d_inhom_exact(double(j) / double(n));
        classical.push_back(
            relative_l2(solve_classical(lifted.homogeneous).u + lifted.g_samples, exact));
        for (const int p : {3, 4}) {
            const SpectralDiagonal diag = fitted_diagonal_1d(lifted.homogeneous, p);
            const Eigen::VectorXd u =
                quantum_solve(lifted.homogeneous, diag, ShiftImpl::Mcx).u + lifted.g_samples;
            (p == 3 ? q3 : q4).push_back(relative_l2(u, exact));
        }
    }
    for (std::size_t i = 1; i < classical.size(); ++i)
        if (classical[i] >= classical[i - 1]) {
            detail = "classical error not strictly decreasing";
            return false;
        }
    if (std::abs(q3.front() - classical.front()) / classical.front() > 0.1) {
        detail = "quantum error does not track classical at n=16";
        return false;
    }
    detail = "errors at n=512: classical " + std::to_string(classical.back()) + ", p3 " +
             std::to_string(q3.back()) + ", p4 " + std::to_string(q4.back());
    // same qualitative picture as the homogeneous case: plateau above the
    // classical curve, quartic plateau at or below the cubic one
    return q3.back() >= classical.back() && q4.back() <= q3.back() && q4.back() < 1e-3;
}

bool criterion_matern(std::string& detail) {
    const SpdeParams check = spde_params(2.5, std::sqrt(5.0) / 40.0, 1);
    if (std::abs(check.tau - 4.279e-5) / 4.279e-5 > 0.005) {
        detail = "tau mismatch: " + std::to_string(check.tau);
        return false;
    }
    std::vector<double> finest;
    for (const double beta : {0.5, 1.0, 1.5}) {
        const double nu = 2.0 * beta - 0.5;
        const double ell = std::sqrt(2.0 * nu) / 40.0;
        std::vector<double> errs;
        for (const std::uint64_t n : {64ull, 128ull, 256ull, 512ull}) {
            const ProblemSpec spec = fractional1d_problem(n, beta);
            const Eigen::VectorXd fwd =
                diagonal_fractional_1d(spec.n_extended, spec.length, spec.kappa, spec.beta,
                                       spec.tau);
            Eigen::VectorXd dinv = Eigen::VectorXd::Zero(n);
            for (std::uint64_t k = 1; k < n; ++k) dinv(k) = 1.0 / fwd(k);
            const Eigen::VectorXd row = covariance_row_1d(dinv, n / 2);
            errs.push_back(matern_row_error(row, nu, ell, 1.0 / double(n), n / 2));
        }
        for (std::size_t i = 1; i < errs.size(); ++i)
            if (errs[i] >= errs[i - 1]) {
                detail = "error not decreasing for beta=" + std::to_string(beta);
                return false;
            }
        finest.push_back(errs.back());
    }
    detail = "errors at n=512: " + std::to_string(finest[0]) + " > " +
             std::to_string(finest[1]) + " > " + std::to_string(finest[2]);
    // smoother fields converge faster, so the fine-grid error falls with beta
    return finest[0] > finest[1] && finest[1] > finest[2];
}

bool criterion_2d(std::string& detail) {
    // Poisson: quantum solves against a 512^2 classical reference
    const LiftedProblem ref_problem = poisson2d_problem(512);
    const Eigen::VectorXd ref =
        solve_classical(ref_problem.homogeneous).u + ref_problem.g_samples;
    std::vector<double> errs;
    for (const std::uint64_t n : {8ull, 16ull, 32ull, 64ull}) {
        const LiftedProblem lifted = poisson2d_problem(n);
        const SpectralDiagonal diag =
            fitted_diagonal_2d(lifted.homogeneous, 4, std::min<std::int64_t>(8, std::int64_t(n)));
        const Eigen::VectorXd u =
            quantum_solve(lifted.homogeneous, diag, ShiftImpl::Mcx).u + lifted.g_samples;
        const std::uint64_t step = 512 / n;
        Eigen::VectorXd want(n * n);
        for (std::uint64_t j0 = 0; j0 < n; ++j0)
            for (std::uint64_t j1 = 0; j1 < n; ++j1)
                want(j0 * n + j1) = ref(j0 * step * 512 + j1 * step);
        errs.push_back(relative_l2(u, want));
    }
    for (std::size_t i = 1; i < errs.size(); ++i)
        if (errs[i] >= errs[i - 1]) {
            detail = "2D Poisson error not decreasing";
            return false;
        }

    // fractional covariance rows: fitted rows stay within the propagated
    // fit-error band around the exact-diagonal row and agree with each other
    const ProblemSpec spec = fractional2d_problem(32);
    const double nu = 2.0 * spec.beta - 1.0;
    const double ell = std::sqrt(2.0 * nu) / spec.kappa;
    const SpectralDiagonal d3 = fitted_diagonal_2d(spec, 3, 8);
    const SpectralDiagonal d4 = fitted_diagonal_2d(spec, 4, 8);
    const Eigen::VectorXd row_e = covariance_row_2d(exact_dinv_2d(d3), 16);
    const Eigen::VectorXd row3 = covariance_row_2d(fitted_dinv_2d(d3), 16);
    const Eigen::VectorXd row4 = covariance_row_2d(fitted_dinv_2d(d4), 16);
    const double delta3 = d3.fit2.max_fit_error(), delta4 = d4.fit2.max_fit_error();
    const double band3 = (2.0 + delta3) * delta3 / (d3.scale * d3.scale);
    const double band4 = (2.0 + delta4) * delta4 / (d4.scale * d4.scale);
    if ((row3 - row_e).norm() > band3 || (row4 - row_e).norm() > band4) {
        detail = "fitted covariance row outside its fit-error band";
        return false;
    }
    if ((row3 - row4).norm() > band3 + band4) {
        detail = "p=3 and p=4 rows disagree beyond their fit errors";
        return false;
    }
    const double err_e = matern_row_error(row_e, nu, ell, 1.0 / 32.0, 16);
    const double err3 = matern_row_error(row3, nu, ell, 1.0 / 32.0, 16);
    const double err4 = matern_row_error(row4, nu, ell, 1.0 / 32.0, 16);
    detail = "Poisson errors " + std::to_string(errs.front()) + " -> " +
             std::to_string(errs.back()) + "; Matern errors exact/p3/p4 " +
             std::to_string(err_e) + "/" + std::to_string(err3) + "/" + std::to_string(err4);
    const double slack_e = 1.0 + band3 / row_e.norm();
    return err_e < 0.10 && err3 <= slack_e * err_e + band3 / row_e.norm() &&
           err4 <= slack_e * err_e + band4 / row_e.norm();
}

bool criterion_properties(std::string& detail) {
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(32, 32);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Circuit c = random_circuit(5, 30, seed);
        const Eigen::MatrixXcd u = circuit_unitary(c);
        if (max_abs(u.adjoint() * u - eye) > 1e-10) {
            detail = "random circuit not unitary";
            return false;
        }
        const Eigen::MatrixXcd t = circuit_unitary(transpile(c));
        Eigen::Index r = 0, col = 0;
        u.cwiseAbs().maxCoeff(&r, &col);
        const cplx phase = u(r, col) / t(r, col);
        if (max_abs(u - phase * t) > 1e-9) {
            detail = "transpile not sound up to global phase";
            return false;
        }
        StateVector sv = init_basis(5, seed % 32);
        apply_circuit(sv, c);
        if (std::abs(sv.norm() - 1.0) > 1e-12) {
            detail = "norm not preserved";
            return false;
        }
    }
    // superposition and the folded/extended solve identity
    ProblemSpec s1 = poisson1d_problem(64), s2 = s1, s12 = s1;
    s1.forcing = random_forcing(64, 21);
    s2.forcing = random_forcing(64, 22);
    s12.forcing = s1.forcing + s2.forcing;
    const Eigen::VectorXd lhs = solve_classical(s1).u + solve_classical(s2).u;
    if ((lhs - solve_classical(s12).u).cwiseAbs().maxCoeff() > 1e-12) {
        detail = "superposition violated";
        return false;
    }
    const SpectralDiagonal diag = fitted_diagonal_1d(s1, 3);
    if ((solve_classical(s1).u - solve_folded_1d(s1.forcing, exact_dinv_1d(diag)))
            .cwiseAbs()
            .maxCoeff() > 1e-12) {
        detail = "folded and extended solves disagree";
        return false;
    }
    // ancilla hygiene is enforced inside quantum_solve (1e-10 stray mass)
    ProblemSpec frac = fractional1d_problem(16, 1.0);
    frac.forcing = random_forcing(16, 23);
    const QuantumSolveResult res = quantum_solve(frac, fitted_diagonal_1d(frac, 3));
    if (res.success_probability <= 0.0 || res.success_probability > 1.0 + 1e-12) {
        detail = "success probability out of range";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "QFT matches the DFT matrix for n = 1..6", 10, criterion_qft);
    run_criterion(2, "reflection block-encoding matrix for n = 3..5", 10, criterion_reflection);
    run_criterion(3, "incrementers exact on all basis states, m = 2..6", 30, criterion_shift);
    run_criterion(4, "gate-count ordering and polylog scaling", 120, criterion_gatecounts);
    run_criterion(5, "piecewise polynomial encoding exactness", 10, criterion_encoding);
    run_criterion(6, "quantum equals classical fitted pipeline", 600, criterion_equivalence);
    run_criterion(7, "1D Poisson convergence and quantum plateaus", 600,
                  criterion_convergence_1d);
    run_criterion(8, "inhomogeneous 1D reconstruction", 300, criterion_inhomogeneous);
    run_criterion(9, "Matern covariance convergence per beta", 300, criterion_matern);
    run_criterion(10, "2D Poisson reference and fractional covariance", 1800, criterion_2d);
    run_criterion(11, "property suite on randomized inputs", 300, criterion_properties);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
