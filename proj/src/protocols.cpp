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

#include "nvconv/protocols.hpp"

#include <algorithm>
#include <stdexcept>

#include "nvconv/optics.hpp"
#include "nvconv/parallel.hpp"

namespace nvconv {

namespace {

void check_photons(std::size_t n) {
    if (n < 3 || n > 5) {
        throw std::invalid_argument("unsupported photon count " +
                                    std::to_string(n) + " (expected 3, 4 or 5)");
    }
}

// Second-stage CNOT target for control photon c.
std::size_t second_stage_target(std::size_t n, std::size_t c) {
    // For n = 5 the third control wraps around to photon 1.
    return (n == 5 && c == 5) ? 1 : c - 2;
}

std::vector<Step> wiring_suffix(std::size_t n) {
    std::vector<Step> steps;
    for (std::size_t p = 3; p <= n; ++p) {
        steps.push_back({StepKind::Hwp, p});
    }
    for (std::size_t p = 3; p <= n; ++p) {
        steps.push_back({StepKind::Qwp, p});
    }
    for (std::size_t c = 3; c <= n; ++c) {
        steps.push_back({StepKind::Cnot, c, second_stage_target(n, c)});
    }
    steps.push_back({StepKind::Kerr});
    steps.push_back({StepKind::Homodyne});
    return steps;
}

} // namespace

std::string to_string(const Step &step) {
    switch (step.kind) {
    case StepKind::Cnot:
        return "CNOT(" + std::to_string(step.first) + "->" +
               std::to_string(step.second) + ")";
    case StepKind::Hwp:
        return "HWP(" + std::to_string(step.first) + ")";
    case StepKind::Qwp:
        return "QWP(" + std::to_string(step.first) + ")";
    case StepKind::Kerr:
        return "Kerr";
    case StepKind::Homodyne:
        return "Homodyne";
    }
    return "?";
}

std::vector<Step> circuit_wiring(std::size_t n_photons) {
    check_photons(n_photons);
    std::vector<Step> steps;
    for (std::size_t t = 3; t <= n_photons; ++t) {
        steps.push_back({StepKind::Cnot, 2, t});
    }
    const auto suffix = wiring_suffix(n_photons);
    steps.insert(steps.end(), suffix.begin(), suffix.end());
    return steps;
}

std::vector<Step> recovery_sequence(std::size_t n_photons) {
    check_photons(n_photons);
    if (n_photons == 4) {
        throw std::invalid_argument("no recovery path");
    }
    std::vector<Step> steps{{StepKind::Hwp, 2}, {StepKind::Qwp, 2},
                            {StepKind::Cnot, 2, 1}};
    const auto suffix = wiring_suffix(n_photons);
    steps.insert(steps.end(), suffix.begin(), suffix.end());
    return steps;
}

QuantumState ghz_input(std::size_t n_photons) {
    check_photons(n_photons);
    std::string a = "RL";
    std::string b = "LR";
    a.append(n_photons - 2, 'R');
    b.append(n_photons - 2, 'L');
    return superpose({{ket(a), 1.0}, {ket(b), 1.0}});
}

void ProtocolSpec::validate() const {
    check_photons(n_photons);
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("probe amplitude must be non-negative");
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("theta must be finite");
    }
    if (gate_mode == GateMode::Realistic) {
        params.validate();
    }
}

std::vector<int> nominal_tags(std::size_t n_photons) {
    if (n_photons == 5) {
        return {1, 3, 5};
    }
    if (n_photons == 3 || n_photons == 4) {
        return {1, 3};
    }
    throw std::invalid_argument("unsupported photon count");
}

std::string to_string(OutcomeClass c) {
    switch (c) {
    case OutcomeClass::W:
        return "W";
    case OutcomeClass::Dicke:
        return "Dicke";
    case OutcomeClass::FailedMaxIter:
        return "failed_max_iter";
    case OutcomeClass::Rejected:
        return "rejected";
    }
    return "?";
}

namespace {

enum class Decision { W, Dicke, Recover, Reject };

Decision decide(std::size_t n, int tag) {
    switch (n) {
    case 3:
        return tag == 1 ? Decision::W : tag == 3 ? Decision::Recover : Decision::Reject;
    case 4:
        return (tag == 1 || tag == 3) ? Decision::W : Decision::Reject;
    default:
        return tag == 1   ? Decision::W
               : tag == 3 ? Decision::Dicke
               : tag == 5 ? Decision::Recover
                          : Decision::Reject;
    }
}

class Executor {
  public:
    Executor(const ProtocolSpec &spec, Rng &rng)
        : spec_(spec), rng_(rng),
          map_(spin_photon_map(spec.params, spec.gate_mode)) {}

    QuantumState apply(const QuantumState &state, const Step &step,
                       ProtocolRun &run) {
        switch (step.kind) {
        case StepKind::Hwp:
            return hwp(state, step.first);
        case StepKind::Qwp:
            return qwp(state, step.first);
        case StepKind::Cnot:
            ++run.cnot_count;
            if (spec_.gate_mode == GateMode::Ideal) {
                return cnot_ideal(state, step.first, step.second);
            }
            return realistic_cnot(state, step, run);
        case StepKind::Kerr:
        case StepKind::Homodyne:
            break;
        }
        throw std::logic_error("measurement steps are handled by the driver");
    }

  private:
    QuantumState realistic_cnot(const QuantumState &state, const Step &step,
                                ProtocolRun &run) {
        CnotOutcome out = cnot_full(state, step.first, step.second, map_, rng_);
        run.spin_outcomes.push_back(out.spin_result);
        run.gate_fidelity_product *= overlap_fidelity(
            out.post_state, cnot_ideal(state, step.first, step.second));
        return std::move(out.post_state);
    }

    const ProtocolSpec &spec_;
    Rng &rng_;
    SpinPhotonMap map_;
};

} // namespace

ProtocolRun run_protocol(const ProtocolSpec &spec, Rng &rng,
                         std::span<const int> forced_tags) {
    spec.validate();
    const std::size_t n = spec.n_photons;
    Executor exec(spec, rng);
    ProtocolRun run;
    run.n_photons = n;

    QuantumState state = ghz_input(n);
    std::vector<Step> steps = circuit_wiring(n);
    for (std::size_t iter = 1; iter <= spec.max_iterations; ++iter) {
        run.iterations_used = iter;
        for (const Step &step : steps) {
            if (step.kind == StepKind::Kerr) {
                break;
            }
            state = exec.apply(state, step, run);
        }
        const KerrPartition part = apply_cross_kerr(state, spec.theta, spec.alpha);
        const HomodyneModel model(spec.alpha, spec.theta, nominal_tags(n));
        const HomodyneResult readout =
            iter <= forced_tags.size()
                ? homodyne_measure(part, model, forced_tags[iter - 1])
                : homodyne_measure(part, model, spec.homodyne_mode, rng);
        run.homodyne_tags.push_back(readout.reported_tag);
        run.true_tags.push_back(readout.true_tag);
        if (readout.misclassified()) {
            ++run.misclassification_events;
        }
        state = readout.state;

        const Decision d = decide(n, readout.reported_tag);
        if (d == Decision::W) {
            run.outcome = OutcomeClass::W;
            if (n == 4 && readout.reported_tag == 3 && spec.standard_w_form) {
                for (std::size_t p = 1; p <= n; ++p) {
                    state = hwp(state, p);
                }
            }
            break;
        }
        if (d == Decision::Dicke) {
            run.outcome = OutcomeClass::Dicke;
            break;
        }
        if (d == Decision::Reject) {
            run.outcome = OutcomeClass::Rejected;
            break;
        }
        // Recovery optics open the next iteration.
        run.outcome = OutcomeClass::FailedMaxIter;
        steps = recovery_sequence(n);
    }
    run.accumulated_norm = state.norm_squared();
    run.final_state = std::move(state);

    if (spec.gate_mode == GateMode::Realistic) {
        ProtocolSpec ideal = spec;
        ideal.gate_mode = GateMode::Ideal;
        ideal.homodyne_mode = HomodyneMode::Ideal;
        ideal.max_iterations = run.iterations_used;
        try {
            Rng unused(0);
            const ProtocolRun reference = run_protocol(ideal, unused, run.true_tags);
            run.fidelity = overlap_fidelity(run.final_state, reference.final_state);
        } catch (const std::invalid_argument &) {
            // The realistic trajectory left the ideal support.
            run.fidelity = 0.0;
        }
    }
    return run;
}

std::string StateClass::label() const {
    switch (kind) {
    case StateKind::W:
        return "W";
    case StateKind::WFlipped:
        return "W_flipped";
    case StateKind::Dicke:
        return "Dicke(" + std::to_string(n_photons) + "," +
               std::to_string(l_count) + ")";
    case StateKind::GhzLike:
        return "GHZ_like";
    case StateKind::Other:
        return "other";
    }
    return "?";
}

std::string StateClass::r_label() const {
    switch (kind) {
    case StateKind::W:
        return "W_flipped";
    case StateKind::WFlipped:
        return "W";
    case StateKind::Dicke:
        return "Dicke(" + std::to_string(n_photons) + "," +
               std::to_string(n_photons - l_count) + ")";
    default:
        return label();
    }
}

StateClass classify_state(const QuantumState &state, double tol) {
    StateClass result;
    result.n_photons = state.photons();
    if (state.has_spin() || state.norm_squared() <= kNormTolerance) {
        return result;
    }
    const QuantumState s = normalize(state);
    const std::size_t n = s.photons();
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (std::abs(s[i]) > tol) {
            support.push_back(i);
        }
    }
    const Complex ref = s[support.front()];
    const bool equal_amplitudes =
        std::all_of(support.begin(), support.end(),
                    [&](std::size_t i) { return std::abs(s[i] - ref) <= tol; });

    const std::size_t m = l_count(s, support.front());
    const bool same_weight = std::all_of(
        support.begin(), support.end(),
        [&](std::size_t i) { return l_count(s, i) == m; });
    // Binomial coefficient C(n, m).
    std::size_t expected = 1;
    for (std::size_t j = 1; j <= m; ++j) {
        expected = expected * (n - m + j) / j;
    }
    if (equal_amplitudes && same_weight && support.size() == expected &&
        m > 0 && m < n) {
        result.l_count = m;
        result.kind = m == 1 ? StateKind::W
                      : m == n - 1 ? StateKind::WFlipped
                                   : StateKind::Dicke;
        return result;
    }
    const std::size_t all = (std::size_t{1} << n) - 1;
    if (support.size() == 2 && (support[0] ^ support[1]) == all &&
        std::abs(std::abs(s[support[0]]) - std::abs(s[support[1]])) <= tol) {
        result.kind = StateKind::GhzLike;
    }
    return result;
}

SuccessSeries success_series(std::size_t n_photons, std::size_t rounds) {
    check_photons(n_photons);
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be at least 1");
    }
    SuccessSeries s;
    s.n_photons = n_photons;
    if (n_photons == 4) {
        s.per_round = {1.0};
        s.cumulative = 1.0;
        s.limit = 1.0;
        return s;
    }
    // Each round fails into the recovery branch with probability `retry`.
    const double retry = n_photons == 3 ? 1.0 / 4.0 : 1.0 / 16.0;
    const double w = n_photons == 3 ? 3.0 / 4.0 : 5.0 / 16.0;
    const double d = n_photons == 3 ? 0.0 : 10.0 / 16.0;
    double reach = 1.0;
    for (std::size_t m = 1; m <= rounds; ++m) {
        s.per_round.push_back(reach * w);
        s.cumulative += reach * w;
        if (n_photons == 5) {
            s.per_round_dicke.push_back(reach * d);
            s.cumulative_dicke += reach * d;
        }
        reach *= retry;
    }
    s.limit = w / (1.0 - retry);
    s.limit_dicke = d / (1.0 - retry);
    return s;
}

double MonteCarloTable::frequency(OutcomeClass c) const {
    const auto it = counts.find(c);
    if (trials == 0 || it == counts.end()) {
        return 0.0;
    }
    return static_cast<double>(it->second) / static_cast<double>(trials);
}

MonteCarloTable monte_carlo(const ProtocolSpec &spec, std::size_t trials,
                            std::uint64_t seed, std::size_t jobs) {
    spec.validate();
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    constexpr std::size_t kChunk = 4096;
    const std::size_t items = (trials + kChunk - 1) / kChunk;
    std::vector<MonteCarloTable> partial(items);
    parallel_for(items, jobs, [&](std::size_t item) {
        Rng rng = derive_stream(seed, item);
        MonteCarloTable &t = partial[item];
        const std::size_t begin = item * kChunk;
        const std::size_t end = std::min(trials, begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) {
            const ProtocolRun run = run_protocol(spec, rng);
            ++t.trials;
            ++t.counts[run.outcome];
            ++t.iteration_histogram[run.iterations_used];
            t.misclassification_events += run.misclassification_events;
        }
    });
    MonteCarloTable total;
    for (const auto &t : partial) {
        total.trials += t.trials;
        for (const auto &[c, k] : t.counts) {
            total.counts[c] += k;
        }
        for (const auto &[it, k] : t.iteration_histogram) {
            total.iteration_histogram[it] += k;
        }
        total.misclassification_events += t.misclassification_events;
    }
    return total;
}

std::size_t cnot_count(std::size_t n_photons, std::size_t iterations,
                       RecoveryCount convention) {
    check_photons(n_photons);
    if (iterations < 1) {
        throw std::invalid_argument("iterations must be at least 1");
    }
    const std::size_t first = 2 * (n_photons - 2);
    if (n_photons == 4) {
        return first;
    }
    // Recovery adds CNOT(2->1) plus the second-stage (or every) CNOT.
    const std::size_t per_recovery =
        1 + (convention == RecoveryCount::Executed ? n_photons - 2 : first);
    return first + (iterations - 1) * per_recovery;
}

double composite_fidelity(double per_gate, std::size_t gates) {
    return std::pow(per_gate, static_cast<double>(gates));
}

} // namespace nvconv
