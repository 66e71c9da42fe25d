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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsine {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Locale-independent shortest round-trip formatting with a '.' decimal
/// separator; used for every numeric CSV cell so outputs are byte-stable.
std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

/// (index, x, value) dump of a grid function at x_j = j * dx.
void write_solution_csv(const std::filesystem::path& path, const Eigen::VectorXd& values,
                        double dx);

/// Little-endian float64 array with an 8-byte little-endian element count.
void write_binary_f64(const std::filesystem::path& path, const Eigen::VectorXd& values);
Eigen::VectorXd read_binary_f64(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);

/// Long-format reshape of an experiment table: the first column is kept as
/// the x axis and every remaining column becomes a (series, x, y) row block.
CsvTable melt_table(const CsvTable& table);

}  // namespace qsine
