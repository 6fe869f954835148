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

// Passive polarization optics and the microwave spin Hadamard.
//
// Circular beam splitters and optical switches only route photons between
// spatial paths; they carry no amplitude and are not modelled.

#pragma once

#include <string_view>

#include "nvconv/state.hpp"

namespace nvconv {

enum class ElementKind { QWP, HWP, SpinHadamard, PiShifter };

struct OpticalElement {
    ElementKind kind;
    Matrix2 matrix;
};

std::string_view element_name(ElementKind kind);

/// R -> (R + L)/sqrt2, L -> (R - L)/sqrt2.
const Matrix2 &qwp_matrix();
/// R <-> L.
const Matrix2 &hwp_matrix();
/// + -> (+ + -)/sqrt2, - -> (+ - -)/sqrt2.
const Matrix2 &spin_hadamard_matrix();
const Matrix2 &pi_shifter_matrix();
const Matrix2 &identity_matrix();
/// Pauli X; used as the Table-style feed-forward correction.
const Matrix2 &pauli_x();

OpticalElement element(ElementKind kind);

QuantumState qwp(const QuantumState &state, std::size_t photon);
QuantumState hwp(const QuantumState &state, std::size_t photon);
QuantumState spin_hadamard(const QuantumState &state);

/// U^dagger U == I within `tol`.
bool is_unitary(const Matrix2 &m, double tol = kNormTolerance);

} // namespace nvconv
