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

// Run configuration for the nvconv command-line tool. The JSON layout is
// documented in docs/config.schema.json.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nvconv/protocols.hpp"

namespace nvconv::bench {

/// Malformed or incomplete configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Range {
    double min = 0.0;
    double max = 0.0;
    friend bool operator==(const Range &, const Range &) = default;
};

struct SweepGrid {
    Range g_over_kappa;
    Range g_over_gamma;
    std::size_t steps = 2;

    /// `steps` evenly spaced points, both ends included.
    [[nodiscard]] std::vector<double> kappa_axis() const;
    [[nodiscard]] std::vector<double> gamma_axis() const;
    void validate() const;
    friend bool operator==(const SweepGrid &, const SweepGrid &) = default;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    ProtocolSpec protocol;
    std::optional<SweepGrid> sweep;
    std::size_t trials = 1000;
    std::optional<std::uint64_t> seed;
    std::size_t jobs = 0; ///< 0 = machine parallelism
    std::size_t rounds = 4;
    std::string output_path; ///< empty = stdout
    std::optional<OutputFormat> format;

    friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

/// Default protocol parameters: resonant cavity at g, kappa = 0.3, 26 GHz
/// with the zero-phonon-line decay rate, theta = 0.1 rad, alpha^2 = 1.3e4.
RunConfig default_config();

nlohmann::json to_json(const RunConfig &config);

/// Throws ConfigError on unknown keys, wrong types or invalid values.
RunConfig config_from_json(const nlohmann::json &json);

RunConfig load_config(const std::filesystem::path &path);

std::string to_string(GateMode mode);
std::string to_string(HomodyneMode mode);
std::string to_string(OutputFormat format);
GateMode parse_gate_mode(const std::string &text);
HomodyneMode parse_homodyne_mode(const std::string &text);
OutputFormat parse_format(const std::string &text);

} // namespace nvconv::bench
