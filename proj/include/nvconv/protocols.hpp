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

/**
 * @file
 * GHZ -> W / Dicke conversion circuits for 3, 4 and 5 photons.
 *
 * Each protocol runs its wiring, tags the photons against a cross-Kerr
 * probe and branches on the homodyne readout. The 3- and 5-photon circuits
 * have a heralded all-L branch that a short recovery sequence feeds back
 * into the second half of the wiring; the 4-photon circuit succeeds on
 * every readout.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nvconv/cavity.hpp"
#include "nvconv/cnot.hpp"
#include "nvconv/kerr.hpp"
#include "nvconv/state.hpp"

namespace nvconv {

enum class StepKind { Cnot, Hwp, Qwp, Kerr, Homodyne };

/// One circuit element. Cnot uses (first = control, second = target);
/// Hwp/Qwp act on `first`.
struct Step {
    StepKind kind;
    std::size_t first = 0;
    std::size_t second = 0;

    friend bool operator==(const Step &, const Step &) = default;
};

std::string to_string(const Step &step);

/// Frozen wiring of the n-photon circuit, ending with Kerr and homodyne.
std::vector<Step> circuit_wiring(std::size_t n_photons);

/// HWP(2), QWP(2), CNOT(2->1), then the wiring from HWP(3) onwards.
std::vector<Step> recovery_sequence(std::size_t n_photons);

/// (|R L R..R> + |L R L..L>)/sqrt2, the GHZ-type input of each circuit.
QuantumState ghz_input(std::size_t n_photons);

/// Probe tags the ideal circuit can produce; the homodyne discriminator is
/// tuned to these peaks only.
std::vector<int> nominal_tags(std::size_t n_photons);

struct ProtocolSpec {
    std::size_t n_photons = 3;
    std::size_t max_iterations = 4;
    GateMode gate_mode = GateMode::Ideal;
    HomodyneMode homodyne_mode = HomodyneMode::Ideal;
    CavityParams params;
    double theta = 0.1;
    double alpha = std::sqrt(1.3e4);
    /// Flip all photons of the 4-photon three-L outcome to the single-L form.
    bool standard_w_form = false;

    void validate() const;
    friend bool operator==(const ProtocolSpec &, const ProtocolSpec &) = default;
};

enum class OutcomeClass {
    W,
    Dicke,
    FailedMaxIter,
    Rejected, ///< readout outside the protocol's expected tags
};

std::string to_string(OutcomeClass c);

struct ProtocolRun {
    std::size_t n_photons = 0;
    std::size_t iterations_used = 0;
    OutcomeClass outcome = OutcomeClass::FailedMaxIter;
    QuantumState final_state = QuantumState::zero(1, false);
    std::vector<int> homodyne_tags; ///< reported per iteration
    std::vector<int> true_tags;     ///< collapsed branch per iteration
    std::size_t misclassification_events = 0;
    double accumulated_norm = 1.0; ///< squared norm surviving cavity loss
    std::size_t cnot_count = 0;
    std::vector<Spin> spin_outcomes;
    double gate_fidelity_product = 1.0;
    /// Realistic runs: overlap with the ideal run on the same tag schedule.
    std::optional<double> fidelity;
};

/// Runs the protocol; `forced_tags[i]` (when present) fixes iteration i's
/// readout, later iterations are sampled.
ProtocolRun run_protocol(const ProtocolSpec &spec, Rng &rng,
                         std::span<const int> forced_tags = {});

enum class StateKind { W, WFlipped, Dicke, GhzLike, Other };

struct StateClass {
    StateKind kind = StateKind::Other;
    std::size_t n_photons = 0;
    std::size_t l_count = 0; ///< number of L photons per support ket

    /// Label counting L photons as excitations, e.g. "Dicke(5,3)".
    [[nodiscard]] std::string label() const;
    /// Label counting R photons as excitations, e.g. "Dicke(5,2)".
    [[nodiscard]] std::string r_label() const;
};

StateClass classify_state(const QuantumState &state, double tol = 1e-9);

struct SuccessSeries {
    std::size_t n_photons = 0;
    std::vector<double> per_round; ///< W per round
    double cumulative = 0.0;
    std::vector<double> per_round_dicke; ///< 5-photon only
    double cumulative_dicke = 0.0;
    double limit = 0.0; ///< rounds -> infinity
    double limit_dicke = 0.0;
};

SuccessSeries success_series(std::size_t n_photons, std::size_t rounds);

struct MonteCarloTable {
    std::size_t trials = 0;
    std::map<OutcomeClass, std::size_t> counts;
    std::map<std::size_t, std::size_t> iteration_histogram;
    std::size_t misclassification_events = 0;

    [[nodiscard]] double frequency(OutcomeClass c) const;
};

/// Trials are split into fixed-size work items, each with its own stream
/// derived from (seed, item), so results do not depend on `jobs`.
MonteCarloTable monte_carlo(const ProtocolSpec &spec, std::size_t trials,
                            std::uint64_t seed, std::size_t jobs = 0);

/// How a recovery round is charged when counting gates.
enum class RecoveryCount {
    Executed,  ///< recovery CNOT + second-stage CNOTs (what run_protocol does)
    FullRerun, ///< recovery CNOT + the whole wiring again
};

/// CNOTs on a trajectory that stops after `iterations` rounds.
std::size_t cnot_count(std::size_t n_photons, std::size_t iterations,
                       RecoveryCount convention = RecoveryCount::Executed);

/// Per-gate fidelity compounded over `gates` gates.
double composite_fidelity(double per_gate, std::size_t gates);

} // namespace nvconv
