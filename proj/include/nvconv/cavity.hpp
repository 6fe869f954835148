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
 * Input-output physics of a single N-V center coupled to a microtoroidal
 * resonator: reflection coefficients and the conditional spin-photon map a
 * reflected photon experiences.
 */

#pragma once

#include <array>

#include "nvconv/state.hpp"

namespace nvconv {

/// Rates and angular frequencies, all in GHz.
struct CavityParams {
    double g = 1.0;     ///< cavity / N-V coupling strength
    double kappa = 1.0; ///< cavity damping rate
    double gamma = 1.0; ///< N-V dipolar decay rate
    double omega_c = 0.0;
    double omega_0 = 0.0;
    double omega_p = 0.0;

    /// Resonant parameters with g/kappa and g/gamma fixed; g sets the scale.
    static CavityParams from_ratios(double g_over_kappa, double g_over_gamma,
                                    double g = 1.0);

    [[nodiscard]] bool resonant() const {
        return omega_c == omega_0 && omega_0 == omega_p;
    }
    /// Cooperativity-like figure g^2 / (kappa gamma).
    [[nodiscard]] double coupling_ratio() const { return g * g / (kappa * gamma); }

    /// Throws std::invalid_argument unless g, kappa and gamma are positive.
    void validate() const;

    friend bool operator==(const CavityParams &, const CavityParams &) = default;
};

struct ReflectionPair {
    Complex r;  ///< coupled cavity
    Complex r0; ///< empty cavity
};

/// r(omega_p) for a photon driving the coupled transition.
Complex reflection_coefficient(const CavityParams &p);

/// r0(omega_p) of the empty (uncoupled) cavity.
Complex empty_reflection(const CavityParams &p);

ReflectionPair reflections(const CavityParams &p);

enum class GateMode { Ideal, Realistic };

/**
 * Diagonal photon (x) spin map of one cavity reflection, including the pi
 * phase shifter on the output path. Factors are ordered R+, R-, L+, L-.
 *
 * Ideal: diag(1, 1, 1, -1). Realistic: -r0 on R+, R-, L+ and -r on L-, which
 * reduces to the ideal map when r = 1 and r0 = -1.
 */
struct SpinPhotonMap {
    std::array<Complex, 4> factors;

    [[nodiscard]] Complex factor(Pol pol, Spin spin) const {
        return factors[(static_cast<unsigned>(pol) << 1) |
                       static_cast<unsigned>(spin)];
    }
    [[nodiscard]] bool is_unitary(double tol = kNormTolerance) const;

    /// Reflects `photon` off the cavity holding the register's spin.
    [[nodiscard]] QuantumState apply(const QuantumState &state,
                                     std::size_t photon) const;
};

SpinPhotonMap ideal_spin_photon_map();
SpinPhotonMap spin_photon_map(const CavityParams &p, GateMode mode);

/// Largest entry-wise deviation between two maps.
double max_factor_difference(const SpinPhotonMap &a, const SpinPhotonMap &b);

} // namespace nvconv
