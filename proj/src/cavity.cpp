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

#include "nvconv/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nvconv {

namespace {
constexpr Complex kI{0.0, 1.0};
}

CavityParams CavityParams::from_ratios(double g_over_kappa, double g_over_gamma,
                                       double g) {
    if (!(g_over_kappa > 0.0) || !(g_over_gamma > 0.0) || !(g > 0.0)) {
        throw std::invalid_argument("coupling ratios must be positive");
    }
    CavityParams p;
    p.g = g;
    p.kappa = g / g_over_kappa;
    p.gamma = g / g_over_gamma;
    return p;
}

void CavityParams::validate() const {
    if (!(g > 0.0) || !(kappa > 0.0) || !(gamma > 0.0)) {
        throw std::invalid_argument("cavity parameters g, kappa, gamma must be "
                                    "strictly positive");
    }
    if (!std::isfinite(omega_c) || !std::isfinite(omega_0) ||
        !std::isfinite(omega_p)) {
        throw std::invalid_argument("cavity frequencies must be finite");
    }
}

Complex reflection_coefficient(const CavityParams &p) {
    p.validate();
    const Complex cavity = kI * (p.omega_c - p.omega_p);
    const Complex emitter = kI * (p.omega_0 - p.omega_p) + p.gamma / 2.0;
    const double g2 = p.g * p.g;
    return ((cavity - p.kappa / 2.0) * emitter + g2) /
           ((cavity + p.kappa / 2.0) * emitter + g2);
}

Complex empty_reflection(const CavityParams &p) {
    p.validate();
    const Complex cavity = kI * (p.omega_c - p.omega_p);
    return (cavity - p.kappa / 2.0) / (cavity + p.kappa / 2.0);
}

ReflectionPair reflections(const CavityParams &p) {
    return {reflection_coefficient(p), empty_reflection(p)};
}

bool SpinPhotonMap::is_unitary(double tol) const {
    return std::all_of(factors.begin(), factors.end(), [tol](Complex f) {
        return std::abs(std::abs(f) - 1.0) <= tol;
    });
}

QuantumState SpinPhotonMap::apply(const QuantumState &state,
                                  std::size_t photon) const {
    return apply_two_site_diagonal(state, Site::photon(photon), Site::spin(),
                                   factors);
}

SpinPhotonMap ideal_spin_photon_map() {
    return {{Complex{1.0}, Complex{1.0}, Complex{1.0}, Complex{-1.0}}};
}

SpinPhotonMap spin_photon_map(const CavityParams &p, GateMode mode) {
    if (mode == GateMode::Ideal) {
        return ideal_spin_photon_map();
    }
    const auto [r, r0] = reflections(p);
    return {{-r0, -r0, -r0, -r}};
}

double max_factor_difference(const SpinPhotonMap &a, const SpinPhotonMap &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        worst = std::max(worst, std::abs(a.factors[i] - b.factors[i]));
    }
    return worst;
}

} // namespace nvconv
