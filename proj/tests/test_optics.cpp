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

#include <gtest/gtest.h>

#include <cmath>

#include "nvconv/optics.hpp"
#include "support.hpp"

using namespace nvconv;
using testing_support::ket_distance;
using testing_support::to_ket;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

TEST(Optics, AllElementsUnitary) {
    for (ElementKind k : {ElementKind::QWP, ElementKind::HWP, ElementKind::SpinHadamard,
                          ElementKind::PiShifter}) {
        EXPECT_TRUE(is_unitary(element(k).matrix)) << element_name(k);
    }
    Matrix2 skew{{{1.0, 0.0}, {0.5, 1.0}}};
    EXPECT_FALSE(is_unitary(skew));
}

TEST(Optics, QwpCaptionConvention) {
    EXPECT_LT(ket_distance(to_ket(qwp(ket("R"), 1)), {{"R", kH}, {"L", kH}}), 1e-15);
    EXPECT_LT(ket_distance(to_ket(qwp(ket("L"), 1)), {{"R", kH}, {"L", -kH}}), 1e-15);
    EXPECT_LT(ket_distance(to_ket(qwp(qwp(ket("R"), 1), 1)), {{"R", 1.0}}), 1e-15);
}

TEST(Optics, HwpFlips) {
    EXPECT_LT(ket_distance(to_ket(hwp(ket("RLR"), 2)), {{"RRR", 1.0}}), 1e-15);
    EXPECT_LT(ket_distance(to_ket(hwp(ket("LLL"), 2)), {{"LRL", 1.0}}), 1e-15);
    const QuantumState s = superpose({{ket("RL"), {0.2, 0.4}}, {ket("LL"), 1.0}});
    EXPECT_LT(ket_distance(to_ket(hwp(hwp(s, 1), 1)), to_ket(s)), 1e-15);
}

TEST(Optics, SpinHadamard) {
    const auto plus = to_ket(spin_hadamard(ket("R+")));
    EXPECT_LT(ket_distance(plus, {{"R+", kH}, {"R-", kH}}), 1e-15);
    const auto minus = to_ket(spin_hadamard(ket("R-")));
    EXPECT_LT(ket_distance(minus, {{"R+", kH}, {"R-", -kH}}), 1e-15);
    const QuantumState eq = superpose({{ket("R+"), 1.0}, {ket("R-"), 1.0}});
    EXPECT_LT(ket_distance(to_ket(spin_hadamard(eq)), {{"R+", 1.0}}), 1e-15);
    EXPECT_LT(ket_distance(to_ket(spin_hadamard(spin_hadamard(ket("L-")))),
                           {{"L-", 1.0}}),
              1e-15);
    EXPECT_THROW(spin_hadamard(ket("R")), std::invalid_argument);
}

TEST(Optics, InvalidPhotonIndex) {
    EXPECT_THROW(qwp(ket("RR"), 3), std::out_of_range);
    EXPECT_THROW(hwp(ket("RR"), 0), std::invalid_argument);
}

TEST(Optics, PiShifterIsMinusIdentity) {
    const Matrix2 &m = pi_shifter_matrix();
    EXPECT_EQ(m[0][0], Complex(-1.0));
    EXPECT_EQ(m[1][1], Complex(-1.0));
    EXPECT_EQ(m[0][1], Complex(0.0));
}

} // namespace
