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
#include "qsine/qft.hpp"

#include <cmath>
#include <numbers>

namespace qsine {

Circuit build_qft(int n) {
    Circuit c(n);
    for (int j = 0; j < n; ++j) {
        c.h(j);
        for (int l = 2; l <= n - j; ++l)
            c.cphase(j + l - 1, j, 2.0 * std::numbers::pi / std::exp2(l));
    }
    for (int j = 0; j < n / 2; ++j) c.swap(j, n - 1 - j);
    return c;
}

Circuit build_qft_inverse(int n) { return build_qft(n).inverse(); }

Eigen::MatrixXcd dft_matrix(std::uint64_t n) {
    Eigen::MatrixXcd f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::uint64_t j = 0; j < n; ++j)
        for (std::uint64_t k = 0; k < n; ++k) {
            const double a = 2.0 * std::numbers::pi * static_cast<double>(j * k) / n;
            f(j, k) = scale * cplx{std::cos(a), std::sin(a)};
        }
    return f;
}

}  // namespace qsine
