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
#include "qsine/spectral.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <numbers>
#include <random>

namespace qsine {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

void check_extended_size(std::uint64_t n) {
    if (n < 4 || !is_power_of_two(n))
        throw SpectralError("extended grid size must be a power of two >= 4");
}

void fft_inplace(Eigen::VectorXcd& a, bool inverse) {
    const std::uint64_t n = static_cast<std::uint64_t>(a.size());
    if (!is_power_of_two(n)) throw SpectralError("transform size must be a power of two");
    for (std::uint64_t i = 1, j = 0; i < n; ++i) {
        std::uint64_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a(i), a(j));
    }
    // forward kernel is exp(+2 pi i / len) to match the dft_matrix convention
    for (std::uint64_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * kPi / double(len) * (inverse ? -1.0 : 1.0);
        const cplx wl = std::polar(1.0, ang);
        for (std::uint64_t i = 0; i < n; i += len) {
            cplx w{1.0, 0.0};
            for (std::uint64_t j = 0; j < len / 2; ++j) {
                const cplx u = a(i + j);
                const cplx v = a(i + j + len / 2) * w;
                a(i + j) = u + v;
                a(i + j + len / 2) = u - v;
                w *= wl;
            }
        }
    }
    a /= std::sqrt(double(n));
}

// complex antisymmetric extension of a half vector with v(0) == 0
Eigen::VectorXcd extend_c(const Eigen::VectorXcd& v) {
    const std::uint64_t half = static_cast<std::uint64_t>(v.size());
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(2 * half);
    for (std::uint64_t k = 1; k < half; ++k) {
        e(k) = v(k);
        e(2 * half - k) = -v(k);
    }
    return e;
}

// R^T: fold the extended vector back onto the physical wavenumbers
Eigen::VectorXcd fold(const Eigen::VectorXcd& v) {
    const std::uint64_t n = static_cast<std::uint64_t>(v.size());
    Eigen::VectorXcd h = Eigen::VectorXcd::Zero(n / 2);
    for (std::uint64_t k = 1; k < n / 2; ++k) h(k) = v(k) - v(n - k);
    return h;
}

// S = R^T F R and its adjoint with the inverse transform
Eigen::VectorXcd apply_s(const Eigen::VectorXcd& v, bool adjoint) {
    Eigen::VectorXcd e = extend_c(v);
    fft_inplace(e, adjoint);
    return fold(e);
}

std::uint64_t mirror(std::uint64_t k, std::uint64_t n) { return k <= n / 2 ? k : n - k; }

double inverse_diag_mirrored(const ProblemSpec& spec, std::uint64_t r0, std::uint64_t r1) {
    const double w = kPi / spec.length;
    const double rr = double(r0 * r0 + r1 * r1);
    if (spec.family == Family::Poisson) {
        if (rr == 0.0) return 0.0;
        return 1.0 / (w * w * rr);
    }
    return 1.0 / (spec.tau * std::pow(spec.kappa * spec.kappa + w * w * rr, spec.beta));
}

void validate(const ProblemSpec& spec) {
    check_extended_size(spec.n_extended);
    if (spec.dim != 1 && spec.dim != 2) throw SpectralError("dimension must be 1 or 2");
    if (spec.length <= 0.0) throw SpectralError("domain length must be positive");
    if (spec.family == Family::Fractional && (spec.kappa <= 0.0 || spec.tau <= 0.0))
        throw SpectralError("fractional problems need kappa > 0 and tau > 0");
    const std::uint64_t half = spec.n_extended / 2;
    const std::uint64_t want = spec.dim == 1 ? half : half * half;
    if (static_cast<std::uint64_t>(spec.forcing.size()) != want)
        throw SpectralError("forcing size does not match the physical grid");
}

}  // namespace

Eigen::VectorXcd fft(const Eigen::VectorXcd& v, bool inverse) {
    Eigen::VectorXcd a = v;
    fft_inplace(a, inverse);
    return a;
}

Eigen::VectorXd extend_antisymmetric(const Eigen::VectorXd& f) {
    const std::uint64_t half = static_cast<std::uint64_t>(f.size());
    if (half < 2) throw SpectralError("physical grid needs at least two points");
    if (f(0) != 0.0) throw SpectralError("boundary sample must be zero");
    Eigen::VectorXd e = Eigen::VectorXd::Zero(2 * half);
    for (std::uint64_t k = 1; k < half; ++k) {
        e(k) = f(k);
        e(2 * half - k) = -f(k);
    }
    return e;
}

Eigen::VectorXd diagonal_poisson_1d(std::uint64_t n_extended, double length) {
    check_extended_size(n_extended);
    const std::uint64_t half = n_extended / 2;
    const double w = kPi / length;
    Eigen::VectorXd d(half);
    for (std::uint64_t k = 0; k < half; ++k) {
        const double kk = double(std::max<std::uint64_t>(k, 1));
        d(k) = w * w * kk * kk;
    }
    return d;
}

Eigen::VectorXd diagonal_fractional_1d(std::uint64_t n_extended, double length, double kappa,
                                       double beta, double tau) {
    check_extended_size(n_extended);
    if (kappa <= 0.0 || tau <= 0.0) throw SpectralError("kappa and tau must be positive");
    const std::uint64_t half = n_extended / 2;
    const double w = kPi / length;
    Eigen::VectorXd d(half);
    for (std::uint64_t k = 0; k < half; ++k)
        d(k) = tau * std::pow(kappa * kappa + w * w * double(k * k), beta);
    return d;
}

Eigen::MatrixXd diagonal_2d(Family family, std::uint64_t n_extended, double length, double kappa,
                            double beta, double tau) {
    check_extended_size(n_extended);
    const std::uint64_t half = n_extended / 2;
    const double w = kPi / length;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(half, half);
    for (std::uint64_t k0 = 0; k0 < half; ++k0)
        for (std::uint64_t k1 = 0; k1 < half; ++k1) {
            if (k0 == 0 || k1 == 0) continue;  // axes carry no sine modes
            const double rr = double(k0 * k0 + k1 * k1);
            if (family == Family::Poisson)
                d(k0, k1) = 1.0 / (w * w * rr);
            else
                d(k0, k1) = 1.0 / (tau * std::pow(kappa * kappa + w * w * rr, beta));
        }
    return d;
}

SpectralSolution solve_classical(const ProblemSpec& spec) {
    validate(spec);
    const std::uint64_t n = spec.n_extended;
    const std::uint64_t half = n / 2;
    SpectralSolution sol;
    if (spec.dim == 1) {
        Eigen::VectorXcd fe = extend_antisymmetric(spec.forcing).cast<cplx>();
        fft_inplace(fe, false);
        Eigen::VectorXcd uhat(n);
        for (std::uint64_t k = 0; k < n; ++k) {
            const std::uint64_t r = mirror(k, n);
            uhat(k) = k == 0 ? cplx{0.0, 0.0} : fe(k) * inverse_diag_mirrored(spec, r, 0);
        }
        sol.fourier = uhat;
        fft_inplace(uhat, true);
        sol.u = uhat.head(half).real();
        return sol;
    }
    // 2D: antisymmetric extension and transform along both axes
    Eigen::MatrixXcd fe = Eigen::MatrixXcd::Zero(n, n);
    for (std::uint64_t j0 = 1; j0 < half; ++j0)
        for (std::uint64_t j1 = 1; j1 < half; ++j1) {
            const double v = spec.forcing(j0 * half + j1);
            fe(j0, j1) = v;
            fe(n - j0, j1) = -v;
            fe(j0, n - j1) = -v;
            fe(n - j0, n - j1) = v;
        }
    for (std::uint64_t j = 0; j < half; ++j)
        if (spec.forcing(j) != 0.0 || spec.forcing(j * half) != 0.0)
            throw SpectralError("boundary samples must be zero");
    for (std::uint64_t c = 0; c < n; ++c) {
        Eigen::VectorXcd col = fe.col(c);
        fft_inplace(col, false);
        fe.col(c) = col;
    }
    for (std::uint64_t r = 0; r < n; ++r) {
        Eigen::VectorXcd row = fe.row(r);
        fft_inplace(row, false);
        fe.row(r) = row;
    }
    for (std::uint64_t k0 = 0; k0 < n; ++k0)
        for (std::uint64_t k1 = 0; k1 < n; ++k1)
            fe(k0, k1) *= inverse_diag_mirrored(spec, mirror(k0, n), mirror(k1, n));
    sol.fourier = Eigen::Map<Eigen::VectorXcd>(fe.data(), fe.size());
    for (std::uint64_t c = 0; c < n; ++c) {
        Eigen::VectorXcd col = fe.col(c);
        fft_inplace(col, true);
        fe.col(c) = col;
    }
    for (std::uint64_t r = 0; r < n; ++r) {
        Eigen::VectorXcd row = fe.row(r);
        fft_inplace(row, true);
        fe.row(r) = row;
    }
    sol.u.resize(half * half);
    for (std::uint64_t j0 = 0; j0 < half; ++j0)
        for (std::uint64_t j1 = 0; j1 < half; ++j1) sol.u(j0 * half + j1) = fe(j0, j1).real();
    return sol;
}

Eigen::VectorXd solve_folded_1d(const Eigen::VectorXd& f, const Eigen::VectorXd& dinv) {
    if (f.size() != dinv.size()) throw SpectralError("diagonal size mismatch");
    Eigen::VectorXcd g = apply_s(f.cast<cplx>(), false);
    for (Eigen::Index k = 0; k < g.size(); ++k) g(k) *= dinv(k);
    return 0.25 * apply_s(g, true).real();
}

Eigen::MatrixXd solve_folded_2d(const Eigen::MatrixXd& f, const Eigen::MatrixXd& dinv) {
    const Eigen::Index half = f.rows();
    if (f.cols() != half || dinv.rows() != half || dinv.cols() != half)
        throw SpectralError("folded 2D solve needs square matching matrices");
    Eigen::MatrixXcd g = f.cast<cplx>();
    for (Eigen::Index c = 0; c < half; ++c) g.col(c) = apply_s(g.col(c), false);
    for (Eigen::Index r = 0; r < half; ++r)
        g.row(r) = apply_s(g.row(r).transpose(), false).transpose();
    g.array() *= dinv.array().cast<cplx>();
    for (Eigen::Index c = 0; c < half; ++c) g.col(c) = apply_s(g.col(c), true);
    for (Eigen::Index r = 0; r < half; ++r)
        g.row(r) = apply_s(g.row(r).transpose(), true).transpose();
    return g.real() / 16.0;
}

LiftedProblem lift_inhomogeneous_1d(const ProblemSpec& spec, double u_lo, double u_hi,
                                    const std::function<double(double)>& g,
                                    const std::function<double(double)>& g_dd) {
    validate(spec);
    if (spec.dim != 1) throw SpectralError("1D lift applied to a 2D problem");
    const double len = spec.length;
    if (std::abs(g(0.0) - u_lo) > 1e-9 || std::abs(g(len) - u_hi) > 1e-9)
        throw SpectralError("lift function does not match the boundary data");
    const std::uint64_t half = spec.n_extended / 2;
    LiftedProblem lifted;
    lifted.homogeneous = spec;
    lifted.g_samples.resize(half);
    for (std::uint64_t j = 0; j < half; ++j) {
        const double x = len * double(j) / double(half);
        lifted.g_samples(j) = g(x);
        lifted.homogeneous.forcing(j) = j == 0 ? 0.0 : spec.forcing(j) + g_dd(x);
    }
    return lifted;
}

LiftedProblem lift_inhomogeneous_2d(const ProblemSpec& spec,
                                    const std::function<double(double, double)>& boundary,
                                    const std::function<double(double, double)>& g,
                                    const std::function<double(double, double)>& laplace_g) {
    validate(spec);
    if (spec.dim != 2) throw SpectralError("2D lift applied to a 1D problem");
    const double len = spec.length;
    const std::uint64_t half = spec.n_extended / 2;
    auto coord = [&](std::uint64_t j) { return len * double(j) / double(half); };
    for (std::uint64_t j = 0; j <= half; ++j) {
        const double t = coord(j);
        for (auto [x0, x1] : {std::pair{0.0, t}, {len, t}, {t, 0.0}, {t, len}})
            if (std::abs(g(x0, x1) - boundary(x0, x1)) > 1e-9)
                throw SpectralError("lift function does not match the boundary data");
    }
    LiftedProblem lifted;
    lifted.homogeneous = spec;
    lifted.g_samples.resize(half * half);
    for (std::uint64_t j0 = 0; j0 < half; ++j0)
        for (std::uint64_t j1 = 0; j1 < half; ++j1) {
            const double x0 = coord(j0), x1 = coord(j1);
            const std::uint64_t idx = j0 * half + j1;
            lifted.g_samples(idx) = g(x0, x1);
            lifted.homogeneous.forcing(idx) =
                (j0 == 0 || j1 == 0) ? 0.0 : spec.forcing(idx) + laplace_g(x0, x1);
        }
    return lifted;
}

double matern_covariance(double r, double nu, double ell) {
    if (nu <= 0.0 || ell <= 0.0 || r < 0.0) throw SpectralError("invalid Matern parameters");
    if (r == 0.0) return 1.0;
    [[maybe_unused]] static const bool handler_disabled = (gsl_set_error_handler_off(), true);
    const double z = std::sqrt(2.0 * nu) * r / ell;
    gsl_sf_result k;
    if (gsl_sf_bessel_Knu_e(nu, z, &k) != GSL_SUCCESS) return 0.0;  // underflow at large z
    return std::pow(2.0, 1.0 - nu) / std::tgamma(nu) * std::pow(z, nu) * k.val;
}

SpdeParams spde_params(double nu, double ell, int dim) {
    if (nu <= 0.0 || ell <= 0.0 || (dim != 1 && dim != 2))
        throw SpectralError("invalid SPDE parameters");
    SpdeParams p;
    p.kappa = std::sqrt(2.0 * nu) / ell;
    p.beta = nu / 2.0 + double(dim) / 4.0;
    const double d = double(dim);
    p.tau = std::sqrt(std::tgamma(nu) /
                      (std::tgamma(nu + d / 2.0) * std::pow(4.0 * kPi, d / 2.0) *
                       std::pow(p.kappa, 2.0 * nu)));
    return p;
}

Eigen::MatrixXd covariance_matrix(const ProblemSpec& spec) {
    check_extended_size(spec.n_extended);
    if (spec.family != Family::Fractional)
        throw SpectralError("covariance is defined for the fractional family");
    const std::uint64_t n = spec.n_extended;
    const std::uint64_t half = n / 2;
    // S = R^T F R = 2i T with real T(j,k) = sin(2 pi j k / N) / sqrt(N), so
    // (1/N) S^dagger D^-2 S = (4/N) T D^-2 T
    Eigen::MatrixXd t(half, half);
    for (std::uint64_t j = 0; j < half; ++j)
        for (std::uint64_t k = 0; k < half; ++k)
            t(j, k) = std::sin(2.0 * kPi * double(j * k) / double(n)) / std::sqrt(double(n));
    const Eigen::VectorXd d =
        diagonal_fractional_1d(n, spec.length, spec.kappa, spec.beta, spec.tau);
    Eigen::VectorXd dinv2 = d.array().square().inverse();
    dinv2(0) = 0.0;
    return 4.0 / double(n) * t * dinv2.asDiagonal() * t;
}

Eigen::VectorXd sample_white_noise(std::uint64_t n, double tau, std::uint64_t seed) {
    if (n < 2 || tau <= 0.0) throw SpectralError("invalid white-noise parameters");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0 / tau);
    Eigen::VectorXd f(n);
    f(0) = 0.0;
    for (std::uint64_t k = 1; k < n; ++k) f(k) = gauss(rng) / double(n);
    return f;
}

}  // namespace qsine
