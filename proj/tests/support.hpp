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

// Glue between library states and the string-keyed oracle.
#pragma once

#include <algorithm>
#include <vector>

#include "nvconv/cnot.hpp"
#include "nvconv/optics.hpp"
#include "nvconv/protocols.hpp"
#include "nvconv/state.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

inline oracle::Ket to_ket(const nvconv::QuantumState &s, double cut = 1e-15) {
    oracle::Ket k;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (std::abs(s[i]) > cut) {
            k[s.ket_label(i)] = s[i];
        }
    }
    return k;
}

inline double ket_distance(const oracle::Ket &a, const oracle::Ket &b) {
    double worst = 0.0;
    for (const auto &[s, v] : a) {
        const auto it = b.find(s);
        worst = std::max(worst, std::abs(v - (it == b.end() ? 0.0 : it->second)));
    }
    for (const auto &[s, v] : b) {
        if (a.find(s) == a.end()) {
            worst = std::max(worst, std::abs(v));
        }
    }
    return worst;
}

/// Runs the ideal optics of `steps` up to the Kerr interaction.
inline nvconv::QuantumState run_to_kerr(nvconv::QuantumState s,
                                        const std::vector<nvconv::Step> &steps) {
    using nvconv::StepKind;
    for (const auto &st : steps) {
        if (st.kind == StepKind::Kerr) {
            break;
        }
        if (st.kind == StepKind::Cnot) {
            s = nvconv::cnot_ideal(s, st.first, st.second);
        } else if (st.kind == StepKind::Hwp) {
            s = nvconv::hwp(s, st.first);
        } else if (st.kind == StepKind::Qwp) {
            s = nvconv::qwp(s, st.first);
        }
    }
    return s;
}

} // namespace testing_support
