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

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qsine/circuit.hpp"

namespace qsine {

class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class EncodingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One fitted piece over the half-open integer range [lo, hi).
struct FitSegment1D {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    Eigen::VectorXd coeffs;  ///< ascending powers, padded to degree+1
    double max_fit_error = 0.0;
};

struct PiecewisePolynomial1D {
    int degree = 0;
    std::vector<FitSegment1D> segments;  ///< contiguous, sorted by lo
    double eval(std::int64_t k) const;   ///< 0 outside the covered range
    double max_fit_error() const;
};

struct FitCell2D {
    std::int64_t lo0 = 0, hi0 = 0;  ///< axis-0 range [lo0, hi0)
    std::int64_t lo1 = 0, hi1 = 0;
    Eigen::MatrixXd coeffs;  ///< coeffs(a, b) multiplies (k0)^a (k1)^b
    double max_fit_error = 0.0;
};

struct PiecewisePolynomial2D {
    int degree = 0;
    std::vector<std::int64_t> boundaries0;  ///< M0+1 sorted axis-0 boundaries
    std::vector<std::int64_t> boundaries1;
    std::vector<FitCell2D> cells;  ///< row-major: cells[i * M1 + j]
    const FitCell2D& cell(int i, int j) const;
    double eval(std::int64_t k0, std::int64_t k1) const;
    /// Differenced coefficient matrices D(i,j) such that the sum of D over
    /// all (i',j') with i' <= i and j' <= j equals cell (i,j)'s coefficients.
    std::vector<Eigen::MatrixXd> differenced() const;
    double max_fit_error() const;
};

/// Spectral solution diagonal with its classical piecewise-polynomial fit of
/// arcsin(scale * exact), ready for rotation encoding.
struct SpectralDiagonal {
    int dim = 1;
    int n = 0;          ///< qubits per axis of the extended domain
    double scale = 1.0; ///< s chosen so 0 <= s * exact <= 1
    std::function<double(std::int64_t)> exact1;
    std::function<double(std::int64_t, std::int64_t)> exact2;
    PiecewisePolynomial1D fit1;
    PiecewisePolynomial2D fit2;
};

/// Default 1D partition {0, 1, 2, 4, ..., 2^{n-1}, 2^n}: smaller segments
/// near the origin where the solution diagonal varies fastest.
std::vector<std::int64_t> geometric_boundaries(int n);

/// Per-segment discrete least squares of f at the integer points of each
/// [b_i, b_{i+1}); the degree is capped to the point count minus one.
PiecewisePolynomial1D fit_univariate(const std::function<double(std::int64_t)>& f,
                                     const std::vector<std::int64_t>& boundaries, int degree);

/// When `keep` is set, only the grid points it accepts enter the least
/// squares; a cell with no kept points gets the zero polynomial. Used to
/// exclude the k = 0 axes, whose encoded values multiply vanishing sine
/// coefficients and must not distort the fit.
PiecewisePolynomial2D fit_bivariate(const std::function<double(std::int64_t, std::int64_t)>& f,
                                    const std::vector<std::int64_t>& boundaries0,
                                    const std::vector<std::int64_t>& boundaries1, int degree,
                                    const std::function<bool(std::int64_t, std::int64_t)>& keep = {});

/// Rotation angle theta_S per qubit subset S (ascending indices) such that
/// sum of theta_S over S subset of the set bits of k equals poly(k) for all
/// k in [0, 2^n); qubit s carries bit weight 2^{n-1-s}. Subsets larger than
/// the polynomial degree carry angle zero and are omitted.
std::map<std::vector<int>, double> multinomial_angles(const Eigen::VectorXd& coeffs, int n);

SpectralDiagonal make_diagonal_1d(std::function<double(std::int64_t)> exact, int n, int degree,
                                  std::vector<std::int64_t> boundaries = {});
/// Default 2D partition is 2x2 with the split at 2^{n-1} per axis. With
/// interior_only the fit samples skip the k = 0 axes.
SpectralDiagonal make_diagonal_2d(std::function<double(std::int64_t, std::int64_t)> exact, int n,
                                  int degree, std::vector<std::int64_t> boundaries = {},
                                  bool interior_only = false);

/// Carry ancillas used by build_comparator; 0 for power-of-two thresholds.
int comparator_ancillas(int n, std::uint64_t threshold);

/// |k>|0>|0..0> -> |k>|k >= threshold>|0..0> on [n data qubits, flag,
/// carries]; carries are computed and uncomputed in place.
Circuit build_comparator(int n, std::uint64_t threshold);

/// Register widths of the encoding circuits: data qubits, the rotation
/// ancilla, segment flags, then shared comparator carries.
struct UpLayout {
    int data = 0;
    int rot = 0;  ///< qubit index of the rotation ancilla
    int flags = 0;
    int carries = 0;
    int total() const { return data + 1 + flags + carries; }
};

UpLayout up_univariate_layout(const SpectralDiagonal& diag, int n);
UpLayout up_bivariate_layout(const SpectralDiagonal& diag, int n_per_axis);

/// For basis |k> with flags and carries |0>, the rotation-ancilla |1> branch
/// acquires amplitude sin(poly_{seg(k)}(k)). Piece selection uses cumulative
/// coefficient differencing so each piece needs only its own flag.
Circuit build_up_univariate(const SpectralDiagonal& diag, int n);

/// 2D analogue on [axis-0 data, axis-1 data, rotation ancilla, axis-0 flags,
/// axis-1 flags, carries], with cell selection by per-axis flag products.
Circuit build_up_bivariate(const SpectralDiagonal& diag, int n_per_axis);

}  // namespace qsine
