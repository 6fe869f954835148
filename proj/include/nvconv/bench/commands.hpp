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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nvconv/bench/config.hpp"
#include "nvconv/bench/report.hpp"

namespace nvconv::bench {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

/// Rendered command output; `summary` is a secondary document when present.
struct CommandOutput {
    std::string body;
    std::optional<std::string> summary;
};

/// Reference cavity point and the gate fidelities quoted for it.
inline constexpr double kReferenceG = 0.3;
inline constexpr double kReferenceKappa = 26.0;
inline constexpr double kGammaTotal = 0.013;
inline constexpr double kGammaZpl = 0.0004;
inline constexpr double kReferenceFidelityPlus = 0.996;
inline constexpr double kReferenceFidelityMinus = 0.995;

/// One protocol execution (seed required).
CommandOutput cmd_run(const RunConfig &config);
/// Outcome frequencies over `trials` runs (seed required).
CommandOutput cmd_montecarlo(const RunConfig &config);
/// CNOT fidelity over the (g/kappa, g/gamma) grid.
CommandOutput cmd_sweep_fidelity(const RunConfig &config);
/// Homodyne likelihood curves for tags 1, 3, 5 plus error summary.
CommandOutput cmd_homodyne_curves(const RunConfig &config);
/// Closed-form success probabilities per round.
CommandOutput cmd_success_table(const RunConfig &config);
/// Reference-point gate fidelities under each convention.
CommandOutput cmd_gate_report(const RunConfig &config);

Table montecarlo_table(const RunConfig &config);
Table sweep_table(const RunConfig &config);
Table homodyne_curve_table(const RunConfig &config);
Table homodyne_summary_table(const RunConfig &config);
Table success_table(const RunConfig &config);
Table gate_report_table(const RunConfig &config);

/// Full CLI: parses argv, runs the command, writes output. Returns the exit
/// code (0 ok, 2 configuration error, 3 runtime error).
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace nvconv::bench
