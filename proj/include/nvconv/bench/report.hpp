// Copyright 2026 The nvconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace nvconv::bench {

using Cell = std::variant<std::string, double, std::int64_t>;

/// Reals are written with 12 significant digits everywhere.
std::string format_real(double value);

/// `value` rounded to 12 significant digits (for JSON output).
double round_real(double value);

/// Flat record table. CSV output: comma separator, header row, '.' decimal
/// point, LF line endings, no quoting (cells never contain commas).
class Table {
  public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);

    [[nodiscard]] const std::vector<std::string> &columns() const { return columns_; }
    [[nodiscard]] const std::vector<std::vector<Cell>> &rows() const { return rows_; }

    [[nodiscard]] std::string to_csv() const;
    /// Array of {column: value} objects.
    [[nodiscard]] nlohmann::ordered_json to_json() const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace nvconv::bench
