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
 * Photonic CNOT mediated by one cavity-coupled N-V spin.
 *
 * Gate sequence (target t, control c, spin prepared in (|+> + |->)/sqrt2):
 *
 *   QWP(t), reflect(t), QWP(t), H_spin, reflect(c), H_spin,
 *   measure spin in {|+>, |->}, X on t iff the spin reads |->.
 *
 * After the correction the target is flipped exactly when the control is L.
 */

#pragma once

#include <vector>

#include "nvconv/cavity.hpp"
#include "nvconv/rng.hpp"
#include "nvconv/state.hpp"

namespace nvconv {

struct CnotOutcome {
    Spin spin_result = Spin::Plus;
    bool corrected = false; ///< X applied to the target (iff spin_result is |->)
    QuantumState post_state; ///< photons only; norm carries cavity loss
    double probability = 0.0;
};

/// Flip `target` iff `control` is L. Photons are numbered from 1.
QuantumState cnot_ideal(const QuantumState &state, std::size_t control,
                        std::size_t target);

/**
 * Joint photon+spin state just before the spin measurement. A photons-only
 * register gets the spin ancilla attached in (|+> + |->)/sqrt2 first.
 */
QuantumState cnot_circuit(const QuantumState &state, std::size_t control,
                          std::size_t target, const SpinPhotonMap &map);

CnotOutcome cnot_full(const QuantumState &state, std::size_t control,
                      std::size_t target, const SpinPhotonMap &map, Rng &rng);
CnotOutcome cnot_full(const QuantumState &state, std::size_t control,
                      std::size_t target, const SpinPhotonMap &map,
                      Spin forced);

enum class FidelityNorm {
    Renormalized, ///< loss read as heralded failure
    Unnormalized, ///< loss counts against the fidelity
};

enum class FidelityInput {
    BasisAverage, ///< mean over |RR>, |RL>, |LR>, |LL>
    Uniform,      ///< (|RR> + |RL> + |LR> + |LL>)/2
};

/**
 * |<psi_r|psi_i>|^2 for a two-photon input (control photon 2, target
 * photon 1), conditioned on the spin reading `outcome`.
 */
double cnot_fidelity(const CavityParams &params, const QuantumState &input,
                     Spin outcome, FidelityNorm norm = FidelityNorm::Renormalized);

double cnot_fidelity(const CavityParams &params, FidelityInput input,
                     Spin outcome, FidelityNorm norm = FidelityNorm::Renormalized);

struct GateFidelityPoint {
    double g_over_kappa = 0.0;
    double g_over_gamma = 0.0;
    Spin outcome = Spin::Plus;
    double fidelity = 0.0;
};

/// Row-major grid over both ratios, both outcomes per point (plus first).
std::vector<GateFidelityPoint>
fidelity_surface(const std::vector<double> &g_over_kappa,
                 const std::vector<double> &g_over_gamma,
                 FidelityInput input = FidelityInput::BasisAverage,
                 FidelityNorm norm = FidelityNorm::Renormalized);

} // namespace nvconv
