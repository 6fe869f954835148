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
 * Dense state vectors for a register of photonic polarization qubits with an
 * optional N-V spin ancilla.
 *
 * Basis layout: photon 1 is the most significant qubit, the spin (when
 * present) the least significant one. Polarization R is bit 0, L is bit 1;
 * spin |+> is bit 0, |-> is bit 1.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nvconv/rng.hpp"

namespace nvconv {

using Complex = std::complex<double>;

/// Row-major 2x2 operator acting on one qubit.
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Single-qubit ket in a two-level basis.
using Vector2 = std::array<Complex, 2>;

enum class Pol : unsigned { R = 0, L = 1 };
enum class Spin : unsigned { Plus = 0, Minus = 1 };

inline constexpr std::size_t kMaxPhotons = 8;
inline constexpr double kNormTolerance = 1e-12;

/// A tensor factor of the register: photon number (1-based) or the spin.
class Site {
  public:
    static constexpr Site photon(std::size_t number) { return Site(number); }
    static constexpr Site spin() { return Site(0); }

    [[nodiscard]] constexpr bool is_spin() const { return photon_ == 0; }
    [[nodiscard]] constexpr std::size_t photon_number() const { return photon_; }
    [[nodiscard]] std::string label() const;

    friend constexpr bool operator==(Site, Site) = default;

  private:
    explicit constexpr Site(std::size_t photon) : photon_(photon) {}
    std::size_t photon_;
};

/// Immutable amplitude vector over (n photons) x (optional spin).
class QuantumState {
  public:
    QuantumState(std::size_t n_photons, bool has_spin,
                 std::vector<Complex> amplitudes);

    /// All-zero vector with the given register shape.
    static QuantumState zero(std::size_t n_photons, bool has_spin);

    [[nodiscard]] std::size_t photons() const { return n_photons_; }
    [[nodiscard]] bool has_spin() const { return has_spin_; }
    [[nodiscard]] std::size_t dimension() const { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    [[nodiscard]] Complex operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] double norm() const;

    /// Bit shift of a site inside a basis index. Throws on invalid sites.
    [[nodiscard]] std::size_t shift_of(Site site) const;
    [[nodiscard]] bool same_shape(const QuantumState &other) const {
        return n_photons_ == other.n_photons_ && has_spin_ == other.has_spin_;
    }

    /// Polarization string ("RLR") of a basis index, spin appended as +/-.
    [[nodiscard]] std::string ket_label(std::size_t index) const;

    /// Human-readable sum of non-negligible terms.
    [[nodiscard]] std::string to_string(double cutoff = 1e-12) const;

  private:
    std::size_t n_photons_;
    bool has_spin_;
    std::vector<Complex> amplitudes_;
};

/// Measurement bookkeeping. `outcome` indexes the supplied basis.
struct MeasurementRecord {
    std::string observable;
    std::size_t outcome = 0;
    double probability = 0.0;
};

/// Pair of orthonormal kets defining a projective single-site measurement.
using MeasurementBasis = std::array<Vector2, 2>;

/// {|0>, |1>} of any site; for the spin this is {|+>, |->}.
MeasurementBasis computational_basis();

QuantumState make_basis_state(std::span<const Pol> pols,
                              std::optional<Spin> spin = std::nullopt);

/// Parses a ket label such as "RLR" or "RL+" / "RL-" (trailing spin).
QuantumState ket(std::string_view label);

/// Basis index of a polarization pattern within a photons-only register.
std::size_t basis_index(std::string_view pols);

/// Normalized linear combination of same-shape states.
QuantumState superpose(std::span<const std::pair<QuantumState, Complex>> terms);
QuantumState
superpose(std::initializer_list<std::pair<QuantumState, Complex>> terms);

QuantumState normalize(const QuantumState &state);
QuantumState scale(const QuantumState &state, Complex factor);

QuantumState apply_single_qubit(const QuantumState &state, Site site,
                                const Matrix2 &map);

/// Applies `map` to `target` on the branches where `control` is L (photon)
/// or |-> (spin).
QuantumState apply_controlled(const QuantumState &state, Site control,
                              Site target, const Matrix2 &map);

/// Diagonal two-site map; factors indexed by (bit_a << 1) | bit_b.
QuantumState apply_two_site_diagonal(const QuantumState &state, Site a, Site b,
                                     const std::array<Complex, 4> &factors);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const QuantumState &a, const QuantumState &b);

/// |<a|b>|^2 / (|a|^2 |b|^2); throws on zero-norm arguments.
double overlap_fidelity(const QuantumState &a, const QuantumState &b);

/// Tensors a spin ancilla in `spin_state` onto a photons-only register.
QuantumState attach_spin(const QuantumState &photons, const Vector2 &spin_state);

/// Contracts the spin factor with <v|, leaving a photons-only register.
QuantumState release_spin(const QuantumState &state, const Vector2 &v);

/**
 * Projective measurement of one site.
 *
 * Outcome probabilities are branch weights relative to the input's squared
 * norm, so for a normalized state they equal the squared branch norms. The
 * collapsed state is rescaled to the input's norm; a lossy (sub-normalized)
 * state keeps its accumulated loss through the collapse.
 */
std::pair<MeasurementRecord, QuantumState>
measure_site(const QuantumState &state, Site site,
             const MeasurementBasis &basis, Rng &rng);

std::pair<MeasurementRecord, QuantumState>
measure_site(const QuantumState &state, Site site,
             const MeasurementBasis &basis, std::size_t forced_outcome);

/// Number of L-polarized photons in a basis index.
std::size_t l_count(const QuantumState &state, std::size_t index);

} // namespace nvconv
