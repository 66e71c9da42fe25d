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

// Experiment driver: every command writes CSV result tables plus a
// manifest.json into --out, regenerable byte-for-byte from the same seed.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <mutex>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <thread>

#include "qsine/experiments.hpp"
#include "qsine/gateset.hpp"
#include "qsine/io.hpp"
#include "qsine/qft.hpp"

using json = nlohmann::ordered_json;
using namespace qsine;

namespace {

int thread_count() {
    if (const char* env = std::getenv("QSINE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(std::min(hw, 4u)) : 1;
}

/// Runs fn(i) for i in [0, count) on the QSINE_THREADS pool; callers store
/// results by index so output order stays deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct CommonOpts {
    std::string out = "out";
    std::uint64_t seed = 0;
    ShiftImpl shift = ShiftImpl::RippleCarry;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "output directory")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
    const std::map<std::string, ShiftImpl> shifts{{"mcx", ShiftImpl::Mcx},
                                                  {"ripple", ShiftImpl::RippleCarry}};
    cmd->add_option("--shift", opts.shift, "incrementer implementation")
        ->transform(CLI::CheckedTransformer(shifts, CLI::ignore_case))
        ->default_str("ripple");
}

const char* shift_name(ShiftImpl impl) { return impl == ShiftImpl::Mcx ? "mcx" : "ripple"; }

void write_manifest(const std::filesystem::path& dir, json manifest) {
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

std::vector<std::uint64_t> doubling_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; n *= 2) out.push_back(n);
    return out;
}

Eigen::VectorXd sampled_exact_1d(const std::function<double(double)>& f, std::uint64_t half) {
    Eigen::VectorXd v(half);
    for (std::uint64_t j = 0; j < half; ++j) v(j) = f(double(j) / double(half));
    return v;
}

// exact inverse fractional diagonal over the physical wavenumbers
Eigen::VectorXd fractional_dinv(const ProblemSpec& spec) {
    const std::uint64_t half = spec.n_extended / 2;
    const Eigen::VectorXd fwd = diagonal_fractional_1d(spec.n_extended, spec.length, spec.kappa,
                                                       spec.beta, spec.tau);
    Eigen::VectorXd dinv(half);
    dinv(0) = 0.0;
    for (std::uint64_t k = 1; k < half; ++k) dinv(k) = 1.0 / fwd(k);
    return dinv;
}

int run_poisson1d(const CommonOpts& opts, std::uint64_t n_min, std::uint64_t n_max,
                  std::vector<int> ps, bool inhom) {
    const auto ns = doubling_range(n_min, n_max);
    struct Row {
        std::uint64_t n;
        int p;
        double err_q, err_c;
    };
    std::vector<Row> rows(ns.size() * ps.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const std::uint64_t n = ns[i / ps.size()];
        const int p = ps[i % ps.size()];
        const LiftedProblem lifted =
            inhom ? poisson1d_inhom_problem(n)
                  : LiftedProblem{poisson1d_problem(n), Eigen::VectorXd::Zero(n)};
        const Eigen::VectorXd exact = sampled_exact_1d(
            inhom ? std::function<double(double)>(poisson1d_inhom_exact)
                  : std::function<double(double)>(poisson1d_exact),
            n);
        const Eigen::VectorXd u_c = solve_classical(lifted.homogeneous).u + lifted.g_samples;
        const SpectralDiagonal diag = fitted_diagonal_1d(lifted.homogeneous, p);
        const Eigen::VectorXd u_q =
            quantum_solve(lifted.homogeneous, diag, opts.shift).u + lifted.g_samples;
        rows[i] = {n, p, relative_l2(u_q, exact), relative_l2(u_c, exact)};
    });
    CsvTable table;
    table.columns = {"n_phys", "p", "l2_error_quantum", "l2_error_classical"};
    for (const auto& r : rows)
        table.rows.push_back({std::to_string(r.n), std::to_string(r.p), format_double(r.err_q),
                              format_double(r.err_c)});
    const std::string name = inhom ? "poisson1d_inhom" : "poisson1d";
    write_csv(std::filesystem::path(opts.out) / (name + ".csv"), table);

    // solution dump at the largest grid, first p
    const LiftedProblem lifted =
        inhom ? poisson1d_inhom_problem(n_max)
              : LiftedProblem{poisson1d_problem(n_max), Eigen::VectorXd::Zero(n_max)};
    const SpectralDiagonal diag = fitted_diagonal_1d(lifted.homogeneous, ps.front());
    const QuantumSolveResult res = quantum_solve(lifted.homogeneous, diag, opts.shift);
    const Eigen::VectorXd u = res.u + lifted.g_samples;
    write_solution_csv(std::filesystem::path(opts.out) / (name + "_solution.csv"), u,
                       1.0 / double(n_max));
    write_binary_f64(std::filesystem::path(opts.out) / (name + "_solution.bin"), u);

    json manifest;
    manifest["experiment"] = name;
    manifest["seed"] = opts.seed;
    manifest["shift"] = shift_name(opts.shift);
    manifest["n_phys"] = ns;
    manifest["p"] = ps;
    manifest["partition"] = "geometric";
    json chain = json::object();
    for (const auto& [key, value] : res.scale_chain) chain[key] = value;
    manifest["scale_chain_at_n_max"] = chain;
    manifest["success_probability_at_n_max"] = res.success_probability;
    manifest["columns"] = table.columns;
    write_manifest(opts.out, manifest);
    return 0;
}

int run_fractional1d(const CommonOpts& opts, std::uint64_t n_min, std::uint64_t n_max,
                     std::vector<double> betas, int p, std::uint64_t sample_n, int n_samples) {
    const auto ns = doubling_range(n_min, n_max);
    CsvTable cov;
    cov.columns = {"n_phys", "beta", "cov_rel_error"};
    for (const double beta : betas) {
        const double nu = 2.0 * beta - 0.5;
        const double ell = std::sqrt(2.0 * nu) / 40.0;
        for (const std::uint64_t n : ns) {
            const ProblemSpec spec = fractional1d_problem(n, beta);
            const Eigen::VectorXd row = covariance_row_1d(fractional_dinv(spec), n / 2);
            const double err = matern_row_error(row, nu, ell, 1.0 / double(n), n / 2);
            cov.rows.push_back(
                {std::to_string(n), format_double(beta), format_double(err)});
        }
    }
    write_csv(std::filesystem::path(opts.out) / "fractional1d_covariance.csv", cov);

    CsvTable samples;
    samples.columns = {"beta", "sample", "index", "x", "value"};
    for (const double beta : betas) {
        const ProblemSpec spec = fractional1d_problem(sample_n, beta);
        const SpectralDiagonal diag = fitted_diagonal_1d(spec, p);
        const auto fields = sample_random_field_quantum(spec, diag, n_samples, opts.seed,
                                                        opts.shift);
        for (int s = 0; s < n_samples; ++s)
            for (Eigen::Index j = 0; j < fields[s].size(); ++j)
                samples.rows.push_back({format_double(beta), std::to_string(s),
                                        std::to_string(j),
                                        format_double(double(j) / double(sample_n)),
                                        format_double(fields[s](j))});
    }
    write_csv(std::filesystem::path(opts.out) / "fractional1d_samples.csv", samples);

    json manifest;
    manifest["experiment"] = "fractional1d";
    manifest["seed"] = opts.seed;
    manifest["shift"] = shift_name(opts.shift);
    manifest["kappa"] = 40.0;
    manifest["tau"] = 4.279e-5;
    manifest["beta"] = betas;
    manifest["p"] = p;
    manifest["n_phys"] = ns;
    manifest["sample_n"] = sample_n;
    manifest["n_samples"] = n_samples;
    write_manifest(opts.out, manifest);
    return 0;
}

int run_poisson2d(const CommonOpts& opts, std::uint64_t n_min, std::uint64_t n_max, int p,
                  std::int64_t k_split, std::uint64_t n_ref) {
    const LiftedProblem ref_problem = poisson2d_problem(n_ref);
    const Eigen::VectorXd ref =
        solve_classical(ref_problem.homogeneous).u + ref_problem.g_samples;
    auto downsample = [&](std::uint64_t n) {
        const std::uint64_t step = n_ref / n;
        Eigen::VectorXd v(n * n);
        for (std::uint64_t j0 = 0; j0 < n; ++j0)
            for (std::uint64_t j1 = 0; j1 < n; ++j1)
                v(j0 * n + j1) = ref(j0 * step * n_ref + j1 * step);
        return v;
    };

    const auto ns = doubling_range(n_min, n_max);
    struct Row {
        std::uint64_t n;
        double err_q, err_c;
    };
    std::vector<Row> rows(ns.size());
    Eigen::VectorXd u_last;
    parallel_for(ns.size(), [&](std::size_t i) {
        const std::uint64_t n = ns[i];
        const LiftedProblem lifted = poisson2d_problem(n);
        const Eigen::VectorXd want = downsample(n);
        const Eigen::VectorXd u_c = solve_classical(lifted.homogeneous).u + lifted.g_samples;
        const std::int64_t ks = std::min<std::int64_t>(k_split, std::int64_t(n));
        const SpectralDiagonal diag = fitted_diagonal_2d(lifted.homogeneous, p, ks);
        const Eigen::VectorXd u_q =
            quantum_solve(lifted.homogeneous, diag, opts.shift).u + lifted.g_samples;
        rows[i] = {n, relative_l2(u_q, want), relative_l2(u_c, want)};
        if (n == ns.back()) u_last = u_q;
    });
    CsvTable table;
    table.columns = {"n_phys", "p", "l2_error_quantum", "l2_error_classical"};
    for (const auto& r : rows)
        table.rows.push_back({std::to_string(r.n), std::to_string(p), format_double(r.err_q),
                              format_double(r.err_c)});
    write_csv(std::filesystem::path(opts.out) / "poisson2d.csv", table);

    CsvTable field;
    field.columns = {"j0", "j1", "x0", "x1", "value"};
    const std::uint64_t n = ns.back();
    for (std::uint64_t j0 = 0; j0 < n; ++j0)
        for (std::uint64_t j1 = 0; j1 < n; ++j1)
            field.rows.push_back({std::to_string(j0), std::to_string(j1),
                                  format_double(double(j0) / double(n)),
                                  format_double(double(j1) / double(n)),
                                  format_double(u_last(j0 * n + j1))});
    write_csv(std::filesystem::path(opts.out) / "poisson2d_solution.csv", field);
    write_binary_f64(std::filesystem::path(opts.out) / "poisson2d_solution.bin", u_last);

    json manifest;
    manifest["experiment"] = "poisson2d";
    manifest["seed"] = opts.seed;
    manifest["shift"] = shift_name(opts.shift);
    manifest["n_phys"] = ns;
    manifest["p"] = p;
    manifest["k_split"] = k_split;
    manifest["n_ref"] = n_ref;
    write_manifest(opts.out, manifest);
    return 0;
}

int run_fractional2d(const CommonOpts& opts, std::uint64_t n_phys, std::int64_t k_split,
                     std::uint64_t sample_n, int n_samples) {
    const ProblemSpec spec = fractional2d_problem(n_phys);
    const double nu = 2.0 * spec.beta - 1.0;
    const double ell = std::sqrt(2.0 * nu) / spec.kappa;
    const std::uint64_t center = n_phys / 2;
    const double dx = 1.0 / double(n_phys);

    const SpectralDiagonal d3 = fitted_diagonal_2d(spec, 3, k_split);
    const SpectralDiagonal d4 = fitted_diagonal_2d(spec, 4, k_split);
    const Eigen::VectorXd row_exact = covariance_row_2d(exact_dinv_2d(d3), center);
    const Eigen::VectorXd row_p3 = covariance_row_2d(fitted_dinv_2d(d3), center);
    const Eigen::VectorXd row_p4 = covariance_row_2d(fitted_dinv_2d(d4), center);

    CsvTable cov;
    cov.columns = {"index", "x", "cov_exact", "cov_p3", "cov_p4"};
    for (Eigen::Index j = 0; j < row_exact.size(); ++j)
        cov.rows.push_back({std::to_string(j), format_double(double(j) * dx),
                            format_double(row_exact(j)), format_double(row_p3(j)),
                            format_double(row_p4(j))});
    write_csv(std::filesystem::path(opts.out) / "fractional2d_covariance.csv", cov);

    CsvTable samples;
    samples.columns = {"sample", "j0", "j1", "value"};
    if (n_samples > 0) {
        const ProblemSpec small = fractional2d_problem(sample_n);
        const SpectralDiagonal diag =
            fitted_diagonal_2d(small, 4, std::min<std::int64_t>(k_split, std::int64_t(sample_n)));
        const auto fields =
            sample_random_field_quantum(small, diag, n_samples, opts.seed, opts.shift);
        for (int s = 0; s < n_samples; ++s)
            for (std::uint64_t j0 = 0; j0 < sample_n; ++j0)
                for (std::uint64_t j1 = 0; j1 < sample_n; ++j1)
                    samples.rows.push_back({std::to_string(s), std::to_string(j0),
                                            std::to_string(j1),
                                            format_double(fields[s](j0 * sample_n + j1))});
    }
    write_csv(std::filesystem::path(opts.out) / "fractional2d_samples.csv", samples);

    json manifest;
    manifest["experiment"] = "fractional2d";
    manifest["seed"] = opts.seed;
    manifest["shift"] = shift_name(opts.shift);
    manifest["kappa"] = spec.kappa;
    manifest["tau"] = spec.tau;
    manifest["beta"] = spec.beta;
    manifest["n_phys"] = n_phys;
    manifest["k_split"] = k_split;
    manifest["matern_rel_error"] = {{"exact", matern_row_error(row_exact, nu, ell, dx, center)},
                                    {"p3", matern_row_error(row_p3, nu, ell, dx, center)},
                                    {"p4", matern_row_error(row_p4, nu, ell, dx, center)}};
    manifest["fit_max_error"] = {{"p3", d3.fit2.max_fit_error()},
                                 {"p4", d4.fit2.max_fit_error()}};
    write_manifest(opts.out, manifest);
    return 0;
}

// shared by the three gatecount commands; `build` returns (circuit, ancillas)
int run_gatecount(const CommonOpts& opts, const std::string& name, int lo, int hi,
                  const std::function<std::pair<Circuit, int>(int, ShiftImpl)>& build,
                  double exponent_bound) {
    CsvTable table;
    table.columns = {"n", "shift", "cnot", "u3", "total", "n_ancilla"};
    json exponents = json::object();
    bool bound_ok = true;
    for (const ShiftImpl impl : {ShiftImpl::Mcx, ShiftImpl::RippleCarry}) {
        std::vector<double> xs, ys;
        std::vector<GateCount> counts(hi - lo + 1);
        parallel_for(counts.size(), [&](std::size_t i) {
            const auto [circuit, ancillas] = build(lo + int(i), impl);
            counts[i] = count_gates(transpile(circuit), ancillas);
        });
        for (int n = lo; n <= hi; ++n) {
            const GateCount& c = counts[n - lo];
            table.rows.push_back({std::to_string(n), shift_name(impl),
                                  std::to_string(c.cnot_count), std::to_string(c.u3_count),
                                  std::to_string(c.total), std::to_string(c.num_ancilla)});
            xs.push_back(double(n));
            ys.push_back(double(c.total));
        }
        const double exponent = fit_scaling_exponent(xs, ys);
        exponents[shift_name(impl)] = exponent;
        // the polylog bound is asserted on the ripple-carry series, the
        // construction the scaling claim is about
        if (impl == ShiftImpl::RippleCarry && exponent > exponent_bound) bound_ok = false;
    }
    write_csv(std::filesystem::path(opts.out) / (name + ".csv"), table);
    json manifest;
    manifest["experiment"] = name;
    manifest["n_range"] = {lo, hi};
    manifest["fitted_exponents"] = exponents;
    manifest["exponent_bound"] = exponent_bound;
    manifest["columns"] = table.columns;
    write_manifest(opts.out, manifest);
    if (!bound_ok) {
        std::cerr << name << ": ripple-carry exponent exceeds " << exponent_bound << "\n";
        return 1;
    }
    std::cout << name << " exponents: " << exponents.dump() << "\n";
    return 0;
}

int run_plotdata(const std::string& in, const std::string& out_dir) {
    const std::filesystem::path src(in);
    const CsvTable melted = melt_table(read_csv(src));
    write_csv(std::filesystem::path(out_dir) / (src.stem().string() + "_long.csv"), melted);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qsine: quantum-spectral solver experiments.\n"
        "All commands write CSV tables (header row, comma separated, '.' decimal)\n"
        "and a manifest.json into --out; outputs are deterministic given --seed.\n"
        "Desk-scale limits: 1D up to 1024 physical points, 2D up to 64x64."};
    app.require_subcommand(1);

    CommonOpts opts;
    std::uint64_t n_min = 16, n_max = 256, n2_min = 8, n2_max = 32, n_ref = 512;
    std::uint64_t frac_n = 32, sample_n = 64, sample2_n = 8;
    std::vector<int> ps{3, 4};
    // the solver series starts at n = 4: below that the segment count still
    // grows with n and the low-n transient skews the log-log slope
    int p = 3, p2 = 4, n_samples = 3, lo = 3, hi = 10, m_lo = 2, m_hi = 10, s_lo = 4, s_hi = 9;
    std::vector<double> betas{0.5, 1.0, 1.5};
    std::int64_t k_split = 8;
    std::string plot_in;

    auto* c1 = app.add_subcommand(
        "poisson1d",
        "1D Poisson convergence sweep.\nCSV: n_phys,p,l2_error_quantum,l2_error_classical");
    add_common(c1, opts);
    c1->add_option("--n-min", n_min, "smallest physical grid (power of two)")
        ->capture_default_str();
    c1->add_option("--n-max", n_max, "largest physical grid (power of two, <= 1024)")
        ->check(CLI::Range(std::uint64_t{4}, std::uint64_t{1024}))
        ->capture_default_str();
    c1->add_option("--p", ps, "piecewise polynomial degrees")->capture_default_str();

    auto* c2 = app.add_subcommand("poisson1d-inhom",
                                  "1D Poisson with u(0)=1/2, u(1)=1 via classical lifting.\n"
                                  "CSV: n_phys,p,l2_error_quantum,l2_error_classical");
    add_common(c2, opts);
    c2->add_option("--n-min", n_min)->capture_default_str();
    c2->add_option("--n-max", n_max)
        ->check(CLI::Range(std::uint64_t{4}, std::uint64_t{1024}))
        ->capture_default_str();
    c2->add_option("--p", ps)->capture_default_str();

    auto* c3 = app.add_subcommand(
        "fractional1d",
        "Matern covariance convergence and quantum random-field samples.\n"
        "CSV: n_phys,beta,cov_rel_error and beta,sample,index,x,value");
    add_common(c3, opts);
    std::uint64_t f_min = 64, f_max = 1024;
    c3->add_option("--n-min", f_min)->capture_default_str();
    c3->add_option("--n-max", f_max)->capture_default_str();
    c3->add_option("--beta", betas, "fractional exponents")->capture_default_str();
    c3->add_option("--p", p)->capture_default_str();
    c3->add_option("--sample-n", sample_n, "grid for quantum samples")->capture_default_str();
    c3->add_option("--samples", n_samples)->capture_default_str();

    auto* c4 = app.add_subcommand(
        "poisson2d",
        "2D Poisson with quadratic boundary lift vs a high-resolution reference.\n"
        "CSV: n_phys,p,l2_error_quantum,l2_error_classical");
    add_common(c4, opts);
    c4->add_option("--n-min", n2_min)->capture_default_str();
    c4->add_option("--n-max", n2_max)
        ->check(CLI::Range(std::uint64_t{4}, std::uint64_t{64}))
        ->capture_default_str();
    c4->add_option("--p", p2)->capture_default_str();
    c4->add_option("--k-split", k_split, "fitted subdomain boundary")->capture_default_str();
    c4->add_option("--n-ref", n_ref, "classical reference grid")->capture_default_str();

    auto* c5 = app.add_subcommand(
        "fractional2d",
        "2D fractional covariance rows (exact, p=3, p=4) and quantum samples.\n"
        "CSV: index,x,cov_exact,cov_p3,cov_p4 and sample,j0,j1,value");
    add_common(c5, opts);
    c5->add_option("--n", frac_n, "physical grid per axis")->capture_default_str();
    c5->add_option("--k-split", k_split)->capture_default_str();
    c5->add_option("--sample-n", sample2_n)->capture_default_str();
    c5->add_option("--samples", n_samples)->capture_default_str();

    auto* c6 = app.add_subcommand("gatecount-uf",
                                  "Transpiled incrementer gate counts, both variants.\n"
                                  "CSV: n,shift,cnot,u3,total,n_ancilla");
    add_common(c6, opts);
    c6->add_option("--m-min", m_lo)->capture_default_str();
    c6->add_option("--m-max", m_hi)->capture_default_str();

    auto* c7 = app.add_subcommand("gatecount-ur",
                                  "Transpiled reflection block-encoding gate counts.\n"
                                  "CSV: n,shift,cnot,u3,total,n_ancilla");
    add_common(c7, opts);
    c7->add_option("--n-min", lo)->capture_default_str();
    c7->add_option("--n-max", hi)->capture_default_str();

    auto* c8 = app.add_subcommand("gatecount-solver",
                                  "Transpiled full 1D solver gate counts (Poisson, degree --p).\n"
                                  "CSV: n,shift,cnot,u3,total,n_ancilla");
    add_common(c8, opts);
    c8->add_option("--n-min", s_lo)->capture_default_str();
    c8->add_option("--n-max", s_hi)->capture_default_str();
    c8->add_option("--p", p)->capture_default_str();

    auto* c9 = app.add_subcommand("plotdata",
                                  "Reshape an experiment CSV into long (series,x,y) format.");
    c9->add_option("--in", plot_in, "input CSV")->required();
    c9->add_option("--out", opts.out, "output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c1->parsed()) return run_poisson1d(opts, n_min, n_max, ps, false);
        if (c2->parsed()) return run_poisson1d(opts, n_min, n_max, ps, true);
        if (c3->parsed())
            return run_fractional1d(opts, f_min, f_max, betas, p, sample_n, n_samples);
        if (c4->parsed()) return run_poisson2d(opts, n2_min, n2_max, p2, k_split, n_ref);
        if (c5->parsed()) return run_fractional2d(opts, frac_n, k_split, sample2_n, n_samples);
        if (c6->parsed())
            return run_gatecount(opts, "gatecount_uf", m_lo, m_hi,
                                 [](int m, ShiftImpl impl) {
                                     return std::pair{build_forward_shift(m, impl),
                                                      forward_shift_ancillas(m, impl)};
                                 },
                                 4.0);
        if (c7->parsed())
            return run_gatecount(opts, "gatecount_ur", lo, hi,
                                 [](int n, ShiftImpl impl) {
                                     const ReflectionCircuit rc = build_reflection_unitary(n, impl);
                                     return std::pair{rc.circuit, rc.ancilla_count};
                                 },
                                 4.0);
        if (c8->parsed())
            return run_gatecount(opts, "gatecount_solver", s_lo, s_hi,
                                 [p](int n, ShiftImpl impl) {
                                     const ProblemSpec spec =
                                         poisson1d_problem(std::uint64_t{1} << (n - 1));
                                     const SpectralDiagonal diag = fitted_diagonal_1d(spec, p);
                                     const SolverCircuit sc = build_solver_circuit_1d(diag, impl);
                                     return std::pair{sc.circuit,
                                                      sc.circuit.num_qubits() - n};
                                 },
                                 // n segments x n^p subsets x O(n) per lowered
                                 // rotation: still polylog in the grid size
                                 double(p) + 2.0);
        if (c9->parsed()) return run_plotdata(plot_in, opts.out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
