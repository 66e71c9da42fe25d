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
#include "qsine/io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace qsine {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, mode);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ifstream in(path, mode);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    return in;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw IoError("double formatting failed");
    return std::string(buf, res.ptr);
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    std::ofstream out = open_out(path, std::ios::out | std::ios::trunc);
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw IoError("csv row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
    if (!out) throw IoError("write failed for " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in = open_in(path, std::ios::in);
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw IoError("missing csv header in " + path.string());
    table.columns = split_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != table.columns.size())
            throw IoError("ragged csv row in " + path.string());
        table.rows.push_back(std::move(cells));
    }
    return table;
}

void write_solution_csv(const std::filesystem::path& path, const Eigen::VectorXd& values,
                        double dx) {
    CsvTable table;
    table.columns = {"index", "x", "value"};
    for (Eigen::Index j = 0; j < values.size(); ++j)
        table.rows.push_back(
            {std::to_string(j), format_double(dx * double(j)), format_double(values(j))});
    write_csv(path, table);
}

void write_binary_f64(const std::filesystem::path& path, const Eigen::VectorXd& values) {
    static_assert(std::endian::native == std::endian::little,
                  "binary dumps assume a little-endian host");
    std::ofstream out = open_out(path, std::ios::out | std::ios::trunc | std::ios::binary);
    const std::uint64_t count = static_cast<std::uint64_t>(values.size());
    out.write(reinterpret_cast<const char*>(&count), sizeof(count));
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(count * sizeof(double)));
    if (!out) throw IoError("write failed for " + path.string());
}

Eigen::VectorXd read_binary_f64(const std::filesystem::path& path) {
    std::ifstream in = open_in(path, std::ios::in | std::ios::binary);
    std::uint64_t count = 0;
    in.read(reinterpret_cast<char*>(&count), sizeof(count));
    if (!in) throw IoError("missing length header in " + path.string());
    Eigen::VectorXd values(static_cast<Eigen::Index>(count));
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (!in) throw IoError("truncated float64 array in " + path.string());
    return values;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out = open_out(path, std::ios::out | std::ios::trunc | std::ios::binary);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

CsvTable melt_table(const CsvTable& table) {
    CsvTable out;
    out.columns = {"series", "x", "y"};
    if (table.columns.empty()) throw IoError("cannot melt a table without columns");
    for (std::size_t c = 1; c < table.columns.size(); ++c)
        for (const auto& row : table.rows)
            out.rows.push_back({table.columns[c], row[0], row[c]});
    return out;
}

}  // namespace qsine
