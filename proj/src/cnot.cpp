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

#include "nvconv/cnot.hpp"

#include <cmath>
#include <stdexcept>

#include "nvconv/optics.hpp"

namespace nvconv {

namespace {

void check_pair(const QuantumState &state, std::size_t control,
                std::size_t target) {
    if (control == target) {
        throw std::invalid_argument("control and target must differ");
    }
    (void)state.shift_of(Site::photon(control));
    (void)state.shift_of(Site::photon(target));
}

Vector2 spin_ket(Spin s) {
    return s == Spin::Plus ? Vector2{Complex{1.0}, Complex{0.0}}
                           : Vector2{Complex{0.0}, Complex{1.0}};
}

CnotOutcome finish(std::size_t target,
                   const std::pair<MeasurementRecord, QuantumState> &measured) {
    const auto &[record, collapsed] = measured;
    const Spin spin = record.outcome == 0 ? Spin::Plus : Spin::Minus;
    QuantumState photons = release_spin(collapsed, spin_ket(spin));
    const bool corrected = spin == Spin::Minus;
    if (corrected) {
        photons = apply_single_qubit(photons, Site::photon(target), pauli_x());
    }
    return {spin, corrected, std::move(photons), record.probability};
}

} // namespace

QuantumState cnot_ideal(const QuantumState &state, std::size_t control,
                        std::size_t target) {
    check_pair(state, control, target);
    return apply_controlled(state, Site::photon(control), Site::photon(target),
                            pauli_x());
}

QuantumState cnot_circuit(const QuantumState &state, std::size_t control,
                          std::size_t target, const SpinPhotonMap &map) {
    check_pair(state, control, target);
    const double h = 1.0 / std::sqrt(2.0);
    QuantumState s = state.has_spin()
                         ? state
                         : attach_spin(state, Vector2{Complex{h}, Complex{h}});
    // Target bounce between two QWPs: spin-controlled flip of the target.
    s = qwp(s, target);
    s = map.apply(s, target);
    s = qwp(s, target);
    // Control bounce between two spin Hadamards: control-L flips the spin.
    s = spin_hadamard(s);
    s = map.apply(s, control);
    s = spin_hadamard(s);
    return s;
}

CnotOutcome cnot_full(const QuantumState &state, std::size_t control,
                      std::size_t target, const SpinPhotonMap &map, Rng &rng) {
    const QuantumState joint = cnot_circuit(state, control, target, map);
    return finish(target,
                  measure_site(joint, Site::spin(), computational_basis(), rng));
}

CnotOutcome cnot_full(const QuantumState &state, std::size_t control,
                      std::size_t target, const SpinPhotonMap &map,
                      Spin forced) {
    const QuantumState joint = cnot_circuit(state, control, target, map);
    return finish(target, measure_site(joint, Site::spin(), computational_basis(),
                                       static_cast<std::size_t>(forced)));
}

double cnot_fidelity(const CavityParams &params, const QuantumState &input,
                     Spin outcome, FidelityNorm norm) {
    if (input.photons() != 2 || input.has_spin()) {
        throw std::invalid_argument("cnot_fidelity expects a two-photon state");
    }
    constexpr std::size_t control = 2;
    constexpr std::size_t target = 1;
    const QuantumState joint = cnot_circuit(
        input, control, target, spin_photon_map(params, GateMode::Realistic));
    if (release_spin(joint, spin_ket(outcome)).norm_squared() <=
        kNormTolerance * kNormTolerance) {
        throw std::invalid_argument("branch extinguished");
    }
    const CnotOutcome realistic = finish(
        target, measure_site(joint, Site::spin(), computational_basis(),
                             static_cast<std::size_t>(outcome)));
    const QuantumState ideal = cnot_ideal(normalize(input), control, target);
    if (norm == FidelityNorm::Renormalized) {
        return overlap_fidelity(realistic.post_state, ideal);
    }
    return std::norm(inner(ideal, realistic.post_state)) /
           input.norm_squared();
}

double cnot_fidelity(const CavityParams &params, FidelityInput input,
                     Spin outcome, FidelityNorm norm) {
    if (input == FidelityInput::Uniform) {
        return cnot_fidelity(
            params, superpose({{ket("RR"), 1.0}, {ket("RL"), 1.0},
                               {ket("LR"), 1.0}, {ket("LL"), 1.0}}),
            outcome, norm);
    }
    double sum = 0.0;
    for (const char *label : {"RR", "RL", "LR", "LL"}) {
        sum += cnot_fidelity(params, ket(label), outcome, norm);
    }
    return sum / 4.0;
}

std::vector<GateFidelityPoint>
fidelity_surface(const std::vector<double> &g_over_kappa,
                 const std::vector<double> &g_over_gamma, FidelityInput input,
                 FidelityNorm norm) {
    std::vector<GateFidelityPoint> points;
    points.reserve(g_over_kappa.size() * g_over_gamma.size() * 2);
    for (double gk : g_over_kappa) {
        for (double gg : g_over_gamma) {
            const CavityParams p = CavityParams::from_ratios(gk, gg);
            for (Spin s : {Spin::Plus, Spin::Minus}) {
                points.push_back({gk, gg, s, cnot_fidelity(p, input, s, norm)});
            }
        }
    }
    return points;
}

} // namespace nvconv
