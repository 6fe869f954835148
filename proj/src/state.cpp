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

#include "nvconv/state.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nvconv {

std::string Site::label() const {
    return is_spin() ? std::string("spin")
                     : "photon " + std::to_string(photon_);
}

QuantumState::QuantumState(std::size_t n_photons, bool has_spin,
                           std::vector<Complex> amplitudes)
    : n_photons_(n_photons), has_spin_(has_spin),
      amplitudes_(std::move(amplitudes)) {
    if (n_photons_ == 0) {
        throw std::invalid_argument("empty register");
    }
    if (n_photons_ > kMaxPhotons) {
        throw std::invalid_argument("register exceeds " +
                                    std::to_string(kMaxPhotons) + " photons");
    }
    const std::size_t expected = (std::size_t{1} << n_photons_)
                                 << (has_spin_ ? 1 : 0);
    if (amplitudes_.size() != expected) {
        throw std::invalid_argument("amplitude vector length " +
                                    std::to_string(amplitudes_.size()) +
                                    " does not match register (" +
                                    std::to_string(expected) + ")");
    }
}

QuantumState QuantumState::zero(std::size_t n_photons, bool has_spin) {
    if (n_photons == 0 || n_photons > kMaxPhotons) {
        throw std::invalid_argument("empty register");
    }
    return QuantumState(n_photons, has_spin,
                        std::vector<Complex>((std::size_t{1} << n_photons)
                                             << (has_spin ? 1 : 0)));
}

double QuantumState::norm_squared() const {
    double sum = 0.0;
    for (const auto &a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum;
}

double QuantumState::norm() const { return std::sqrt(norm_squared()); }

std::size_t QuantumState::shift_of(Site site) const {
    const std::size_t spin_bits = has_spin_ ? 1 : 0;
    if (site.is_spin()) {
        if (!has_spin_) {
            throw std::invalid_argument("register has no spin");
        }
        return 0;
    }
    const std::size_t p = site.photon_number();
    if (p < 1 || p > n_photons_) {
        throw std::out_of_range("photon " + std::to_string(p) +
                                " out of range for " +
                                std::to_string(n_photons_) + "-photon register");
    }
    return spin_bits + (n_photons_ - p);
}

std::string QuantumState::ket_label(std::size_t index) const {
    std::string label;
    for (std::size_t p = 1; p <= n_photons_; ++p) {
        label += ((index >> shift_of(Site::photon(p))) & 1U) != 0 ? 'L' : 'R';
    }
    if (has_spin_) {
        label += (index & 1U) != 0 ? '-' : '+';
    }
    return label;
}

std::string QuantumState::to_string(double cutoff) const {
    std::string out;
    char buf[96];
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        const Complex a = amplitudes_[i];
        if (std::abs(a) <= cutoff) {
            continue;
        }
        std::snprintf(buf, sizeof(buf), "%s(%.6g%+.6gi)|%s>",
                      out.empty() ? "" : " + ", a.real(), a.imag(),
                      ket_label(i).c_str());
        out += buf;
    }
    return out.empty() ? "0" : out;
}

MeasurementBasis computational_basis() {
    return {Vector2{Complex{1.0}, Complex{0.0}},
            Vector2{Complex{0.0}, Complex{1.0}}};
}

QuantumState make_basis_state(std::span<const Pol> pols,
                              std::optional<Spin> spin) {
    if (pols.empty()) {
        throw std::invalid_argument("empty register");
    }
    auto state = QuantumState::zero(pols.size(), spin.has_value());
    std::vector<Complex> amps(state.dimension());
    std::size_t index = 0;
    for (Pol p : pols) {
        index = (index << 1) | static_cast<std::size_t>(p);
    }
    if (spin) {
        index = (index << 1) | static_cast<std::size_t>(*spin);
    }
    amps[index] = 1.0;
    return QuantumState(pols.size(), spin.has_value(), std::move(amps));
}

QuantumState ket(std::string_view label) {
    std::vector<Pol> pols;
    std::optional<Spin> spin;
    for (std::size_t i = 0; i < label.size(); ++i) {
        const char c = label[i];
        if (c == 'R' || c == 'L') {
            if (spin) {
                throw std::invalid_argument("spin label must come last");
            }
            pols.push_back(c == 'R' ? Pol::R : Pol::L);
        } else if ((c == '+' || c == '-') && !spin) {
            spin = c == '+' ? Spin::Plus : Spin::Minus;
        } else {
            throw std::invalid_argument("bad ket label '" + std::string(label) +
                                        "'");
        }
    }
    return make_basis_state(pols, spin);
}

std::size_t basis_index(std::string_view pols) {
    std::size_t index = 0;
    for (char c : pols) {
        if (c != 'R' && c != 'L') {
            throw std::invalid_argument("bad polarization label '" +
                                        std::string(pols) + "'");
        }
        index = (index << 1) | (c == 'L' ? 1U : 0U);
    }
    return index;
}

QuantumState
superpose(std::span<const std::pair<QuantumState, Complex>> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("null state");
    }
    const QuantumState &first = terms.front().first;
    std::vector<Complex> amps(first.dimension());
    for (const auto &[state, coeff] : terms) {
        if (!state.same_shape(first)) {
            throw std::invalid_argument("superpose: mismatched register shapes");
        }
        for (std::size_t i = 0; i < amps.size(); ++i) {
            amps[i] += coeff * state[i];
        }
    }
    return normalize(
        QuantumState(first.photons(), first.has_spin(), std::move(amps)));
}

QuantumState
superpose(std::initializer_list<std::pair<QuantumState, Complex>> terms) {
    return superpose(std::span(terms.begin(), terms.size()));
}

QuantumState normalize(const QuantumState &state) {
    const double n = state.norm();
    if (n <= kNormTolerance) {
        throw std::invalid_argument("null state");
    }
    return scale(state, 1.0 / n);
}

QuantumState scale(const QuantumState &state, Complex factor) {
    std::vector<Complex> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
    for (auto &a : amps) {
        a *= factor;
    }
    return QuantumState(state.photons(), state.has_spin(), std::move(amps));
}

QuantumState apply_single_qubit(const QuantumState &state, Site site,
                                const Matrix2 &map) {
    const std::size_t bit = std::size_t{1} << state.shift_of(site);
    std::vector<Complex> amps(state.dimension());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0) {
            continue;
        }
        const Complex a0 = state[i];
        const Complex a1 = state[i | bit];
        amps[i] = map[0][0] * a0 + map[0][1] * a1;
        amps[i | bit] = map[1][0] * a0 + map[1][1] * a1;
    }
    return QuantumState(state.photons(), state.has_spin(), std::move(amps));
}

QuantumState apply_controlled(const QuantumState &state, Site control,
                              Site target, const Matrix2 &map) {
    if (control == target) {
        throw std::invalid_argument("control and target must differ");
    }
    const std::size_t cbit = std::size_t{1} << state.shift_of(control);
    const std::size_t tbit = std::size_t{1} << state.shift_of(target);
    std::vector<Complex> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cbit) == 0 || (i & tbit) != 0) {
            continue;
        }
        const Complex a0 = state[i];
        const Complex a1 = state[i | tbit];
        amps[i] = map[0][0] * a0 + map[0][1] * a1;
        amps[i | tbit] = map[1][0] * a0 + map[1][1] * a1;
    }
    return QuantumState(state.photons(), state.has_spin(), std::move(amps));
}

QuantumState apply_two_site_diagonal(const QuantumState &state, Site a, Site b,
                                     const std::array<Complex, 4> &factors) {
    if (a == b) {
        throw std::invalid_argument("two-site map needs distinct sites");
    }
    const std::size_t sa = state.shift_of(a);
    const std::size_t sb = state.shift_of(b);
    std::vector<Complex> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= factors[(((i >> sa) & 1U) << 1) | ((i >> sb) & 1U)];
    }
    return QuantumState(state.photons(), state.has_spin(), std::move(amps));
}

Complex inner(const QuantumState &a, const QuantumState &b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("inner: mismatched register shapes");
    }
    Complex sum{0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double overlap_fidelity(const QuantumState &a, const QuantumState &b) {
    const double na = a.norm_squared();
    const double nb = b.norm_squared();
    if (na <= kNormTolerance * kNormTolerance ||
        nb <= kNormTolerance * kNormTolerance) {
        throw std::invalid_argument("branch extinguished");
    }
    return std::norm(inner(a, b)) / (na * nb);
}

QuantumState attach_spin(const QuantumState &photons, const Vector2 &spin_state) {
    if (photons.has_spin()) {
        throw std::invalid_argument("register already carries a spin");
    }
    std::vector<Complex> amps(photons.dimension() * 2);
    for (std::size_t i = 0; i < photons.dimension(); ++i) {
        amps[2 * i] = photons[i] * spin_state[0];
        amps[2 * i + 1] = photons[i] * spin_state[1];
    }
    return QuantumState(photons.photons(), true, std::move(amps));
}

QuantumState release_spin(const QuantumState &state, const Vector2 &v) {
    if (!state.has_spin()) {
        throw std::invalid_argument("register has no spin");
    }
    std::vector<Complex> amps(state.dimension() / 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = std::conj(v[0]) * state[2 * i] + std::conj(v[1]) * state[2 * i + 1];
    }
    return QuantumState(state.photons(), false, std::move(amps));
}

namespace {

void check_orthonormal(const MeasurementBasis &basis) {
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            const Complex ip = std::conj(basis[a][0]) * basis[b][0] +
                               std::conj(basis[a][1]) * basis[b][1];
            if (std::abs(ip - Complex(a == b ? 1.0 : 0.0)) > kNormTolerance) {
                throw std::invalid_argument("measurement basis not orthonormal");
            }
        }
    }
}

// Projects `site` onto `v` and leaves the site in state v.
QuantumState project(const QuantumState &state, Site site, const Vector2 &v) {
    const std::size_t bit = std::size_t{1} << state.shift_of(site);
    std::vector<Complex> amps(state.dimension());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0) {
            continue;
        }
        const Complex c = std::conj(v[0]) * state[i] + std::conj(v[1]) * state[i | bit];
        amps[i] = c * v[0];
        amps[i | bit] = c * v[1];
    }
    return QuantumState(state.photons(), state.has_spin(), std::move(amps));
}

std::pair<MeasurementRecord, QuantumState>
collapse(const QuantumState &state, Site site, const MeasurementBasis &basis,
         std::optional<std::size_t> forced, Rng *rng) {
    check_orthonormal(basis);
    const double total = state.norm_squared();
    if (total <= kNormTolerance * kNormTolerance) {
        throw std::invalid_argument("null state");
    }
    std::array<QuantumState, 2> branches{project(state, site, basis[0]),
                                         project(state, site, basis[1])};
    const std::array<double, 2> probs{branches[0].norm_squared() / total,
                                      branches[1].norm_squared() / total};
    std::size_t outcome = 0;
    if (forced) {
        outcome = *forced;
        if (outcome > 1 || probs[outcome] <= kNormTolerance * kNormTolerance) {
            throw std::invalid_argument("impossible outcome");
        }
    } else {
        outcome = uniform01(*rng) < probs[0] ? 0 : 1;
        if (probs[outcome] <= 0.0) {
            outcome = 1 - outcome;
        }
    }
    MeasurementRecord record{site.label(), outcome, probs[outcome]};
    return {record, scale(branches[outcome], std::sqrt(1.0 / probs[outcome]))};
}

} // namespace

std::pair<MeasurementRecord, QuantumState>
measure_site(const QuantumState &state, Site site,
             const MeasurementBasis &basis, Rng &rng) {
    return collapse(state, site, basis, std::nullopt, &rng);
}

std::pair<MeasurementRecord, QuantumState>
measure_site(const QuantumState &state, Site site,
             const MeasurementBasis &basis, std::size_t forced_outcome) {
    return collapse(state, site, basis, forced_outcome, nullptr);
}

std::size_t l_count(const QuantumState &state, std::size_t index) {
    const std::size_t photon_bits = state.has_spin() ? index >> 1 : index;
    return static_cast<std::size_t>(std::popcount(photon_bits));
}

} // namespace nvconv
