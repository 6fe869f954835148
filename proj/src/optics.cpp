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

#include "nvconv/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace nvconv {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Matrix2 kHadamard{{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}};
const Matrix2 kFlip{{{0.0, 1.0}, {1.0, 0.0}}};
const Matrix2 kMinusIdentity{{{-1.0, 0.0}, {0.0, -1.0}}};
const Matrix2 kIdentity{{{1.0, 0.0}, {0.0, 1.0}}};
} // namespace

std::string_view element_name(ElementKind kind) {
    switch (kind) {
    case ElementKind::QWP:
        return "QWP";
    case ElementKind::HWP:
        return "HWP";
    case ElementKind::SpinHadamard:
        return "SpinHadamard";
    case ElementKind::PiShifter:
        return "PiShifter";
    }
    return "?";
}

// The QWP as used here acts as a Hadamard in the circular basis.
const Matrix2 &qwp_matrix() { return kHadamard; }
const Matrix2 &hwp_matrix() { return kFlip; }
const Matrix2 &spin_hadamard_matrix() { return kHadamard; }
const Matrix2 &pi_shifter_matrix() { return kMinusIdentity; }
const Matrix2 &identity_matrix() { return kIdentity; }
const Matrix2 &pauli_x() { return kFlip; }

OpticalElement element(ElementKind kind) {
    switch (kind) {
    case ElementKind::QWP:
        return {kind, qwp_matrix()};
    case ElementKind::HWP:
        return {kind, hwp_matrix()};
    case ElementKind::SpinHadamard:
        return {kind, spin_hadamard_matrix()};
    case ElementKind::PiShifter:
        return {kind, pi_shifter_matrix()};
    }
    throw std::invalid_argument("unknown optical element");
}

QuantumState qwp(const QuantumState &state, std::size_t photon) {
    return apply_single_qubit(state, Site::photon(photon), qwp_matrix());
}

QuantumState hwp(const QuantumState &state, std::size_t photon) {
    return apply_single_qubit(state, Site::photon(photon), hwp_matrix());
}

QuantumState spin_hadamard(const QuantumState &state) {
    return apply_single_qubit(state, Site::spin(), spin_hadamard_matrix());
}

bool is_unitary(const Matrix2 &m, double tol) {
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex s{0.0};
            for (std::size_t k = 0; k < 2; ++k) {
                s += std::conj(m[k][i]) * m[k][j];
            }
            if (std::abs(s - Complex(i == j ? 1.0 : 0.0)) > tol) {
                return false;
            }
        }
    }
    return true;
}

} // namespace nvconv
