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
#include "qsine/polyenc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

namespace qsine {

namespace {

double horner(const Eigen::VectorXd& coeffs, double x) {
    double v = 0.0;
    for (Eigen::Index a = coeffs.size() - 1; a >= 0; --a) v = v * x + coeffs(a);
    return v;
}

void check_boundaries(const std::vector<std::int64_t>& b) {
    if (b.size() < 2) throw FitError("partition needs at least two boundaries");
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i] <= b[i - 1]) throw FitError("boundaries must be strictly increasing");
}

// Least squares of f over the integer points [lo, hi) with column scaling to
// tame the Vandermonde conditioning on wide high-k segments.
Eigen::VectorXd lsq_segment(const std::function<double(std::int64_t)>& f, std::int64_t lo,
                            std::int64_t hi, int degree, double* max_err) {
    const std::int64_t m = hi - lo;
    if (m < 1) throw FitError("empty fit segment");
    const int deg = std::min<std::int64_t>(degree, m - 1);
    Eigen::MatrixXd a(m, deg + 1);
    Eigen::VectorXd b(m);
    for (std::int64_t r = 0; r < m; ++r) {
        const double k = static_cast<double>(lo + r);
        double pw = 1.0;
        for (int j = 0; j <= deg; ++j) {
            a(r, j) = pw;
            pw *= k;
        }
        b(r) = f(lo + r);
    }
    Eigen::VectorXd col_scale(deg + 1);
    for (int j = 0; j <= deg; ++j) {
        col_scale(j) = a.col(j).cwiseAbs().maxCoeff();
        if (col_scale(j) == 0.0) col_scale(j) = 1.0;
        a.col(j) /= col_scale(j);
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < deg + 1) throw FitError("rank-deficient fit segment");
    Eigen::VectorXd x = qr.solve(b);
    *max_err = (a * x - b).cwiseAbs().maxCoeff();
    x.array() /= col_scale.array();
    Eigen::VectorXd padded = Eigen::VectorXd::Zero(degree + 1);
    padded.head(deg + 1) = x;
    return padded;
}

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

// theta_S for one subset via the multinomial expansion of
// (sum_s w_s k_s)^j restricted to idempotent bits: all-positive composition
// sums, avoiding the cancellation of a finite-difference evaluation.
double subset_angle(const Eigen::VectorXd& coeffs, const std::vector<double>& weights) {
    const int p = static_cast<int>(coeffs.size()) - 1;
    const int r = static_cast<int>(weights.size());
    if (r == 0) return coeffs(0);
    std::vector<double> fact(p + 1, 1.0);
    for (int j = 1; j <= p; ++j) fact[j] = fact[j - 1] * j;
    double theta = 0.0;
    // terms[idx][rem]: sum over compositions of rem into positive parts for
    // weights idx.. of prod w_i^{m_i} / m_i!
    std::function<double(int, int)> comp = [&](int idx, int rem) {
        if (idx == r - 1) {
            double pw = 1.0;
            for (int m = 0; m < rem; ++m) pw *= weights[idx];
            return pw / fact[rem];
        }
        const int remaining = r - 1 - idx;  // weights after idx, each needs m >= 1
        double total = 0.0;
        double pw = 1.0;
        for (int m = 1; m <= rem - remaining; ++m) {
            pw *= weights[idx];
            total += pw / fact[m] * comp(idx + 1, rem - m);
        }
        return total;
    };
    for (int j = r; j <= p; ++j)
        if (coeffs(j) != 0.0) theta += coeffs(j) * fact[j] * comp(0, j);
    return theta;
}

void enumerate_subsets(int n, int max_size, const std::function<void(const std::vector<int>&)>& cb) {
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
        cb(subset);
        if (static_cast<int>(subset.size()) == max_size) return;
        for (int s = start; s < n; ++s) {
            subset.push_back(s);
            rec(s + 1);
            subset.pop_back();
        }
    };
    rec(0);
}

std::vector<int> iota_map(int n, int offset = 0) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i + offset;
    return m;
}

// the exact transformed values lie in [0, pi/2]; the fitted polynomial may
// overshoot by no more than a modest multiple of its own fit error
void check_angle_range(double v, double fit_error) {
    const double slack = 1e-9 + 10.0 * fit_error;
    if (v < -slack || v > std::numbers::pi / 2.0 + slack)
        throw EncodingError("fitted rotation angle outside [0, pi/2]");
}

constexpr double kAngleSkip = 1e-15;

}  // namespace

double PiecewisePolynomial1D::eval(std::int64_t k) const {
    for (const auto& s : segments)
        if (k >= s.lo && k < s.hi) return horner(s.coeffs, static_cast<double>(k));
    return 0.0;
}

double PiecewisePolynomial1D::max_fit_error() const {
    double e = 0.0;
    for (const auto& s : segments) e = std::max(e, s.max_fit_error);
    return e;
}

const FitCell2D& PiecewisePolynomial2D::cell(int i, int j) const {
    const int m1 = static_cast<int>(boundaries1.size()) - 1;
    return cells.at(static_cast<std::size_t>(i) * m1 + j);
}

double PiecewisePolynomial2D::eval(std::int64_t k0, std::int64_t k1) const {
    for (const auto& c : cells)
        if (k0 >= c.lo0 && k0 < c.hi0 && k1 >= c.lo1 && k1 < c.hi1) {
            double v = 0.0;
            for (Eigen::Index a = c.coeffs.rows() - 1; a >= 0; --a) {
                double inner = 0.0;
                for (Eigen::Index b = c.coeffs.cols() - 1; b >= 0; --b)
                    inner = inner * static_cast<double>(k1) + c.coeffs(a, b);
                v = v * static_cast<double>(k0) + inner;
            }
            return v;
        }
    return 0.0;
}

std::vector<Eigen::MatrixXd> PiecewisePolynomial2D::differenced() const {
    const int m0 = static_cast<int>(boundaries0.size()) - 1;
    const int m1 = static_cast<int>(boundaries1.size()) - 1;
    auto at = [&](int i, int j) -> Eigen::MatrixXd {
        if (i < 0 || j < 0) return Eigen::MatrixXd::Zero(degree + 1, degree + 1);
        return cell(i, j).coeffs;
    };
    std::vector<Eigen::MatrixXd> d;
    d.reserve(static_cast<std::size_t>(m0) * m1);
    for (int i = 0; i < m0; ++i)
        for (int j = 0; j < m1; ++j)
            d.push_back(at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1));
    return d;
}

double PiecewisePolynomial2D::max_fit_error() const {
    double e = 0.0;
    for (const auto& c : cells) e = std::max(e, c.max_fit_error);
    return e;
}

std::vector<std::int64_t> geometric_boundaries(int n) {
    if (n < 1) throw FitError("domain needs at least one qubit");
    std::vector<std::int64_t> b{0, 1};
    for (std::int64_t v = 2; v <= (std::int64_t{1} << n); v *= 2) b.push_back(v);
    return b;
}

PiecewisePolynomial1D fit_univariate(const std::function<double(std::int64_t)>& f,
                                     const std::vector<std::int64_t>& boundaries, int degree) {
    check_boundaries(boundaries);
    if (degree < 0) throw FitError("negative polynomial degree");
    PiecewisePolynomial1D pp;
    pp.degree = degree;
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        FitSegment1D seg;
        seg.lo = boundaries[i];
        seg.hi = boundaries[i + 1];
        seg.coeffs = lsq_segment(f, seg.lo, seg.hi, degree, &seg.max_fit_error);
        pp.segments.push_back(std::move(seg));
    }
    return pp;
}

PiecewisePolynomial2D fit_bivariate(const std::function<double(std::int64_t, std::int64_t)>& f,
                                    const std::vector<std::int64_t>& boundaries0,
                                    const std::vector<std::int64_t>& boundaries1, int degree,
                                    const std::function<bool(std::int64_t, std::int64_t)>& keep) {
    check_boundaries(boundaries0);
    check_boundaries(boundaries1);
    if (degree < 0) throw FitError("negative polynomial degree");
    PiecewisePolynomial2D pp;
    pp.degree = degree;
    pp.boundaries0 = boundaries0;
    pp.boundaries1 = boundaries1;
    for (std::size_t i = 0; i + 1 < boundaries0.size(); ++i)
        for (std::size_t j = 0; j + 1 < boundaries1.size(); ++j) {
            FitCell2D c;
            c.lo0 = boundaries0[i];
            c.hi0 = boundaries0[i + 1];
            c.lo1 = boundaries1[j];
            c.hi1 = boundaries1[j + 1];
            std::vector<std::pair<std::int64_t, std::int64_t>> points;
            std::set<std::int64_t> kept0, kept1;
            for (std::int64_t k0 = c.lo0; k0 < c.hi0; ++k0)
                for (std::int64_t k1 = c.lo1; k1 < c.hi1; ++k1)
                    if (!keep || keep(k0, k1)) {
                        points.emplace_back(k0, k1);
                        kept0.insert(k0);
                        kept1.insert(k1);
                    }
            if (points.empty()) {
                c.coeffs = Eigen::MatrixXd::Zero(degree + 1, degree + 1);
                pp.cells.push_back(std::move(c));
                continue;
            }
            const int deg0 = std::min<std::int64_t>(degree, std::int64_t(kept0.size()) - 1);
            const int deg1 = std::min<std::int64_t>(degree, std::int64_t(kept1.size()) - 1);
            const std::int64_t rows = std::int64_t(points.size());
            const int cols = (deg0 + 1) * (deg1 + 1);
            Eigen::MatrixXd a(rows, cols);
            Eigen::VectorXd b(rows);
            for (std::int64_t r = 0; r < rows; ++r) {
                const auto [k0, k1] = points[std::size_t(r)];
                b(r) = f(k0, k1);
                double p0 = 1.0;
                for (int x = 0; x <= deg0; ++x) {
                    double p1 = 1.0;
                    for (int y = 0; y <= deg1; ++y) {
                        a(r, x * (deg1 + 1) + y) = p0 * p1;
                        p1 *= static_cast<double>(k1);
                    }
                    p0 *= static_cast<double>(k0);
                }
            }
            Eigen::VectorXd col_scale(cols);
            for (int x = 0; x < cols; ++x) {
                col_scale(x) = a.col(x).cwiseAbs().maxCoeff();
                if (col_scale(x) == 0.0) col_scale(x) = 1.0;
                a.col(x) /= col_scale(x);
            }
            const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
            if (qr.rank() < cols) throw FitError("rank-deficient fit cell");
            Eigen::VectorXd x = qr.solve(b);
            c.max_fit_error = (a * x - b).cwiseAbs().maxCoeff();
            x.array() /= col_scale.array();
            c.coeffs = Eigen::MatrixXd::Zero(degree + 1, degree + 1);
            for (int px = 0; px <= deg0; ++px)
                for (int py = 0; py <= deg1; ++py) c.coeffs(px, py) = x(px * (deg1 + 1) + py);
            pp.cells.push_back(std::move(c));
        }
    return pp;
}

std::map<std::vector<int>, double> multinomial_angles(const Eigen::VectorXd& coeffs, int n) {
    if (n < 1) throw EncodingError("register needs at least one qubit");
    if (coeffs.size() < 1) throw EncodingError("empty coefficient vector");
    const int p = static_cast<int>(coeffs.size()) - 1;
    std::map<std::vector<int>, double> angles;
    enumerate_subsets(n, std::min(p, n), [&](const std::vector<int>& s) {
        std::vector<double> w;
        w.reserve(s.size());
        for (int q : s) w.push_back(std::ldexp(1.0, n - 1 - q));
        angles[s] = subset_angle(coeffs, w);
    });
    return angles;
}

SpectralDiagonal make_diagonal_1d(std::function<double(std::int64_t)> exact, int n, int degree,
                                  std::vector<std::int64_t> boundaries) {
    if (n < 1) throw EncodingError("domain needs at least one qubit");
    if (boundaries.empty()) boundaries = geometric_boundaries(n);
    const std::int64_t big = std::int64_t{1} << n;
    if (boundaries.front() != 0 || boundaries.back() != big)
        throw FitError("partition must cover [0, 2^n)");
    SpectralDiagonal diag;
    diag.dim = 1;
    diag.n = n;
    diag.exact1 = std::move(exact);
    double max_val = 0.0;
    for (std::int64_t k = 0; k < big; ++k) {
        const double v = diag.exact1(k);
        if (v < -1e-12) throw EncodingError("diagonal must be non-negative");
        max_val = std::max(max_val, v);
    }
    diag.scale = max_val > 0.0 ? 1.0 / max_val : 1.0;
    const double s = diag.scale;
    const auto& ex = diag.exact1;
    auto transformed = [s, &ex](std::int64_t k) {
        return std::asin(std::clamp(s * ex(k), 0.0, 1.0));
    };
    diag.fit1 = fit_univariate(transformed, boundaries, degree);
    for (std::int64_t k = 0; k < big; ++k)
        check_angle_range(diag.fit1.eval(k), diag.fit1.max_fit_error());
    return diag;
}

SpectralDiagonal make_diagonal_2d(std::function<double(std::int64_t, std::int64_t)> exact, int n,
                                  int degree, std::vector<std::int64_t> boundaries,
                                  bool interior_only) {
    if (n < 1) throw EncodingError("domain needs at least one qubit");
    const std::int64_t big = std::int64_t{1} << n;
    if (boundaries.empty()) boundaries = {0, big / 2, big};
    if (boundaries.front() != 0 || boundaries.back() != big)
        throw FitError("partition must cover [0, 2^n)");
    SpectralDiagonal diag;
    diag.dim = 2;
    diag.n = n;
    diag.exact2 = std::move(exact);
    double max_val = 0.0;
    for (std::int64_t k0 = 0; k0 < big; ++k0)
        for (std::int64_t k1 = 0; k1 < big; ++k1) {
            const double v = diag.exact2(k0, k1);
            if (v < -1e-12) throw EncodingError("diagonal must be non-negative");
            max_val = std::max(max_val, v);
        }
    diag.scale = max_val > 0.0 ? 1.0 / max_val : 1.0;
    const double s = diag.scale;
    const auto& ex = diag.exact2;
    auto transformed = [s, &ex](std::int64_t k0, std::int64_t k1) {
        return std::asin(std::clamp(s * ex(k0, k1), 0.0, 1.0));
    };
    // the k = 0 axes multiply vanishing sine coefficients, so their encoded
    // angles are free parameters: skip them in the fit and the range check
    std::function<bool(std::int64_t, std::int64_t)> keep;
    if (interior_only) keep = [](std::int64_t k0, std::int64_t k1) { return k0 >= 1 && k1 >= 1; };
    diag.fit2 = fit_bivariate(transformed, boundaries, boundaries, degree, keep);
    for (std::int64_t k0 = interior_only ? 1 : 0; k0 < big; ++k0)
        for (std::int64_t k1 = interior_only ? 1 : 0; k1 < big; ++k1)
            check_angle_range(diag.fit2.eval(k0, k1), diag.fit2.max_fit_error());
    return diag;
}

int comparator_ancillas(int n, std::uint64_t threshold) {
    if (is_power_of_two(threshold) || n < 2) return 0;
    return n - 1;
}

Circuit build_comparator(int n, std::uint64_t threshold) {
    if (n < 1) throw CircuitError("comparator needs at least one data qubit");
    if (threshold == 0 || threshold >= (std::uint64_t{1} << n))
        throw CircuitError("threshold out of range");
    const int flag = n;
    Circuit c(n + 1 + comparator_ancillas(n, threshold));
    if (is_power_of_two(threshold)) {
        // k >= 2^j iff some bit of value >= 2^j is set
        int j = 0;
        while ((std::uint64_t{1} << j) != threshold) ++j;
        if (j == n - 1) {
            c.cx(0, flag);
            return c;
        }
        c.x(flag);
        Gate g{GateKind::X, flag};
        for (int q = 0; q <= n - 1 - j; ++q) g.controls.push_back({q, false});
        c.add(std::move(g));
        return c;
    }
    // ripple the carry of k + (2^n - threshold); the final carry is k >= t
    const std::uint64_t comp = (std::uint64_t{1} << n) - threshold;
    auto bit = [&](int l) { return (comp >> l) & 1; };
    auto data = [&](int l) { return n - 1 - l; };  // LSB-first addressing
    auto anc = [&](int l) { return n + 1 + l; };
    std::vector<Gate> stages;
    if (bit(0)) {
        Gate g{GateKind::X, anc(0)};
        g.controls = {{data(0), true}};
        stages.push_back(g);
    }
    for (int l = 1; l < n; ++l) {
        const int target = l == n - 1 ? flag : anc(l);
        if (bit(l)) {
            // carry_l = k_l OR carry_{l-1}
            stages.push_back({GateKind::X, target});
            Gate g{GateKind::X, target};
            g.controls = {{data(l), false}, {anc(l - 1), false}};
            stages.push_back(g);
        } else {
            Gate g{GateKind::X, target};
            g.controls = {{data(l), true}, {anc(l - 1), true}};
            stages.push_back(g);
        }
    }
    // compute; the flag write is last, then uncompute the carries
    for (const auto& g : stages) c.add(g);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it)
        if (it->target != flag) c.add(*it);
    return c;
}

namespace {

int max_comparator_ancillas(int n, const std::vector<std::int64_t>& boundaries) {
    int anc = 0;
    for (std::size_t i = 1; i + 1 < boundaries.size(); ++i)
        anc = std::max(anc, comparator_ancillas(n, static_cast<std::uint64_t>(boundaries[i])));
    return anc;
}

void append_comparator(Circuit& c, int n, std::uint64_t threshold, int flag, int carry0,
                       bool invert) {
    Circuit cmp = build_comparator(n, threshold);
    if (invert) cmp = cmp.inverse();
    std::vector<int> map = iota_map(n);
    map.push_back(flag);
    for (int a = 0; a < comparator_ancillas(n, threshold); ++a) map.push_back(carry0 + a);
    c.append_mapped(cmp, map);
}

}  // namespace

UpLayout up_univariate_layout(const SpectralDiagonal& diag, int n) {
    if (diag.dim != 1) throw EncodingError("univariate encoder needs a 1D diagonal");
    std::vector<std::int64_t> bounds{0};
    for (const auto& s : diag.fit1.segments) bounds.push_back(s.hi);
    UpLayout lay;
    lay.data = n;
    lay.rot = n;
    lay.flags = static_cast<int>(diag.fit1.segments.size()) - 1;
    lay.carries = max_comparator_ancillas(n, bounds);
    return lay;
}

Circuit build_up_univariate(const SpectralDiagonal& diag, int n) {
    const UpLayout lay = up_univariate_layout(diag, n);
    const auto& segs = diag.fit1.segments;
    if (segs.empty() || segs.front().lo != 0 || segs.back().hi != (std::int64_t{1} << n))
        throw EncodingError("fit does not cover the register domain");
    Circuit c(lay.total());
    const int flag0 = lay.rot + 1;
    const int carry0 = flag0 + lay.flags;
    for (std::size_t i = 1; i < segs.size(); ++i)
        append_comparator(c, n, static_cast<std::uint64_t>(segs[i].lo),
                          flag0 + static_cast<int>(i) - 1, carry0, false);
    Eigen::VectorXd prev = Eigen::VectorXd::Zero(diag.fit1.degree + 1);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Eigen::VectorXd delta = segs[i].coeffs - prev;
        prev = segs[i].coeffs;
        for (const auto& [subset, theta] : multinomial_angles(delta, n)) {
            if (std::abs(theta) < kAngleSkip) continue;
            Gate g{GateKind::RY, lay.rot};
            g.theta = 2.0 * theta;
            for (int q : subset) g.controls.push_back({q, true});
            if (i > 0) g.controls.push_back({flag0 + static_cast<int>(i) - 1, true});
            c.add(std::move(g));
        }
    }
    for (std::size_t i = segs.size(); i-- > 1;)
        append_comparator(c, n, static_cast<std::uint64_t>(segs[i].lo),
                          flag0 + static_cast<int>(i) - 1, carry0, true);
    return c;
}

UpLayout up_bivariate_layout(const SpectralDiagonal& diag, int n_per_axis) {
    if (diag.dim != 2) throw EncodingError("bivariate encoder needs a 2D diagonal");
    UpLayout lay;
    lay.data = 2 * n_per_axis;
    lay.rot = lay.data;
    lay.flags = static_cast<int>(diag.fit2.boundaries0.size()) - 2 +
                static_cast<int>(diag.fit2.boundaries1.size()) - 2;
    lay.carries = std::max(max_comparator_ancillas(n_per_axis, diag.fit2.boundaries0),
                           max_comparator_ancillas(n_per_axis, diag.fit2.boundaries1));
    return lay;
}

Circuit build_up_bivariate(const SpectralDiagonal& diag, int n_per_axis) {
    const int n = n_per_axis;
    const UpLayout lay = up_bivariate_layout(diag, n);
    const auto& pp = diag.fit2;
    const std::int64_t big = std::int64_t{1} << n;
    if (pp.boundaries0.front() != 0 || pp.boundaries0.back() != big ||
        pp.boundaries1.front() != 0 || pp.boundaries1.back() != big)
        throw EncodingError("fit does not cover the register domain");
    const int m0 = static_cast<int>(pp.boundaries0.size()) - 1;
    const int m1 = static_cast<int>(pp.boundaries1.size()) - 1;
    Circuit c(lay.total());
    const int flag0 = lay.rot + 1;
    const int flag1 = flag0 + (m0 - 1);
    const int carry0 = flag1 + (m1 - 1);

    auto axis_comparators = [&](bool invert) {
        for (int i = 1; i < m0; ++i) {
            Circuit cmp = build_comparator(n, static_cast<std::uint64_t>(pp.boundaries0[i]));
            if (invert) cmp = cmp.inverse();
            std::vector<int> map = iota_map(n);
            map.push_back(flag0 + i - 1);
            for (int a = 0; a < comparator_ancillas(n, pp.boundaries0[i]); ++a)
                map.push_back(carry0 + a);
            c.append_mapped(cmp, map);
        }
        for (int j = 1; j < m1; ++j) {
            Circuit cmp = build_comparator(n, static_cast<std::uint64_t>(pp.boundaries1[j]));
            if (invert) cmp = cmp.inverse();
            std::vector<int> map = iota_map(n, n);
            map.push_back(flag1 + j - 1);
            for (int a = 0; a < comparator_ancillas(n, pp.boundaries1[j]); ++a)
                map.push_back(carry0 + a);
            c.append_mapped(cmp, map);
        }
    };
    axis_comparators(false);

    // per-axis monomial angle tables: angle of subset S for poly k^a
    const int p = pp.degree;
    std::vector<std::map<std::vector<int>, double>> mono(p + 1);
    for (int a = 0; a <= p; ++a) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(p + 1);
        e(a) = 1.0;
        mono[a] = multinomial_angles(e, n);
    }
    const std::vector<Eigen::MatrixXd> delta = pp.differenced();
    for (int i = 0; i < m0; ++i)
        for (int j = 0; j < m1; ++j) {
            const Eigen::MatrixXd& d = delta[static_cast<std::size_t>(i) * m1 + j];
            for (const auto& [s0, unused0] : mono[0])
                for (const auto& [s1, unused1] : mono[0]) {
                    double theta = 0.0;
                    for (int a = 0; a <= p; ++a)
                        for (int b = 0; b <= p; ++b)
                            if (d(a, b) != 0.0)
                                theta += d(a, b) * mono[a].at(s0) * mono[b].at(s1);
                    if (std::abs(theta) < kAngleSkip) continue;
                    Gate g{GateKind::RY, lay.rot};
                    g.theta = 2.0 * theta;
                    for (int q : s0) g.controls.push_back({q, true});
                    for (int q : s1) g.controls.push_back({n + q, true});
                    if (i > 0) g.controls.push_back({flag0 + i - 1, true});
                    if (j > 0) g.controls.push_back({flag1 + j - 1, true});
                    c.add(std::move(g));
                }
        }

    axis_comparators(true);
    return c;
}

}  // namespace qsine
