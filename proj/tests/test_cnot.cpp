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

#include <array>
#include <cmath>
#include <random>

#include "nvconv/cnot.hpp"
#include "support.hpp"

using namespace nvconv;
using testing_support::ket_distance;
using testing_support::to_ket;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

struct Coeffs {
    Complex a, b, c, d; // on RR, RL, LR, LL (photon 1 first)
};

Coeffs random_coeffs(std::mt19937_64 &gen) {
    std::normal_distribution<double> n;
    Coeffs k{{n(gen), n(gen)}, {n(gen), n(gen)}, {n(gen), n(gen)}, {n(gen), n(gen)}};
    const double s = std::sqrt(std::norm(k.a) + std::norm(k.b) + std::norm(k.c) +
                               std::norm(k.d));
    k.a /= s;
    k.b /= s;
    k.c /= s;
    k.d /= s;
    return k;
}

QuantumState two_photon(const Coeffs &k) {
    return QuantumState(2, false, {k.a, k.b, k.c, k.d});
}

// Joint photon+spin state written out term by term (target 1, control 2).
oracle::Ket transcribed_joint(const Coeffs &k) {
    return {{"RR+", kH * k.a}, {"LL+", kH * k.b}, {"LR+", kH * k.c}, {"RL+", kH * k.d},
            {"LR-", kH * k.a}, {"RL-", kH * k.b}, {"RR-", kH * k.c}, {"LL-", kH * k.d}};
}

// Photon 1 flipped iff photon 2 is L.
oracle::Ket cnot_target_one(const Coeffs &k) {
    return {{"RR", k.a}, {"LL", k.b}, {"LR", k.c}, {"RL", k.d}};
}

std::array<oracle::C, 4> oracle_factors(const CavityParams &p) {
    const auto r = oracle::reflection(p.g, p.kappa, p.gamma, p.omega_c, p.omega_0,
                                      p.omega_p);
    const auto r0 = oracle::empty_reflection(p.kappa, p.omega_c, p.omega_p);
    return {-r0, -r0, -r0, -r};
}

// Dense oracle vector (|spin, p1, p2>) -> library-style labels.
oracle::Ket dense_to_ket(const std::vector<oracle::C> &v) {
    oracle::Ket k;
    const char *pol = "RL";
    for (int i = 0; i < 8; ++i) {
        if (std::abs(v[static_cast<std::size_t>(i)]) > 1e-15) {
            std::string s{pol[i >> 1 & 1], pol[i & 1], (i >> 2 & 1) ? '-' : '+'};
            k[s] = v[static_cast<std::size_t>(i)];
        }
    }
    return k;
}

std::vector<oracle::C> dense_input(const Coeffs &k) {
    // spin (|+> + |->)/sqrt2 in the most significant slot
    return {kH * k.a, kH * k.b, kH * k.c, kH * k.d, kH * k.a, kH * k.b, kH * k.c, kH * k.d};
}

TEST(Cnot, IdealCircuitReproducesTranscribedJointState) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Coeffs k = random_coeffs(gen);
        const QuantumState joint =
            cnot_circuit(two_photon(k), 2, 1, ideal_spin_photon_map());
        EXPECT_LT(ket_distance(to_ket(joint), transcribed_joint(k)), 1e-12);
    }
}

TEST(Cnot, ForcedOutcomesWithCorrection) {
    std::mt19937_64 gen(6);
    for (int trial = 0; trial < 50; ++trial) {
        const Coeffs k = random_coeffs(gen);
        for (Spin s : {Spin::Plus, Spin::Minus}) {
            const CnotOutcome out = cnot_full(two_photon(k), 2, 1, ideal_spin_photon_map(), s);
            EXPECT_EQ(out.corrected, s == Spin::Minus);
            EXPECT_NEAR(out.probability, 0.5, 1e-12);
            EXPECT_LT(ket_distance(to_ket(out.post_state), cnot_target_one(k)), 1e-12);
        }
    }
}

TEST(Cnot, DenseMatrixOracleIdealAndRealistic) {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    for (int trial = 0; trial < 30; ++trial) {
        const Coeffs k = random_coeffs(gen);
        CavityParams p{u(gen), u(gen), u(gen), 0.0, 0.0, 0.0};
        if (trial % 2) {
            p.omega_p = u(gen) - 1.5;
        }
        for (bool realistic : {false, true}) {
            const std::array<oracle::C, 4> f =
                realistic ? oracle_factors(p) : std::array<oracle::C, 4>{1.0, 1.0, 1.0, -1.0};
            const auto ref = dense_to_ket(oracle::apply(oracle::cnot_circuit(f), dense_input(k)));
            const SpinPhotonMap m =
                spin_photon_map(p, realistic ? GateMode::Realistic : GateMode::Ideal);
            EXPECT_LT(ket_distance(to_ket(cnot_circuit(two_photon(k), 2, 1, m)), ref), 1e-12);
        }
    }
}

TEST(Cnot, TruthTableAllRegistersAndPairs) {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t c = 1; c <= n; ++c) {
            for (std::size_t t = 1; t <= n; ++t) {
                if (c == t) {
                    EXPECT_THROW(cnot_ideal(QuantumState::zero(n, false), c, t),
                                 std::invalid_argument);
                    continue;
                }
                for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
                    std::vector<Complex> amps(std::size_t{1} << n);
                    amps[b] = 1.0;
                    const QuantumState in(n, false, amps);
                    const std::string label = in.ket_label(b);
                    const auto expect =
                        oracle::cnot({{label, 1.0}}, static_cast<int>(c), static_cast<int>(t));
                    EXPECT_LT(ket_distance(to_ket(cnot_ideal(in, c, t)), expect), 1e-15);
                    for (Spin s : {Spin::Plus, Spin::Minus}) {
                        const auto full = cnot_full(in, c, t, ideal_spin_photon_map(), s);
                        EXPECT_LT(ket_distance(to_ket(full.post_state), expect), 1e-12)
                            << label << " c" << c << " t" << t;
                    }
                }
            }
        }
    }
}

TEST(Cnot, IdealGateIsInvolution) {
    std::mt19937_64 gen(9);
    std::normal_distribution<double> nd;
    std::vector<Complex> amps(8);
    for (auto &a : amps) {
        a = {nd(gen), nd(gen)};
    }
    const QuantumState s = normalize(QuantumState(3, false, amps));
    for (auto [c, t] : {std::pair<std::size_t, std::size_t>{1, 2}, {3, 1}, {2, 3}}) {
        EXPECT_LT(ket_distance(to_ket(cnot_ideal(cnot_ideal(s, c, t), c, t)), to_ket(s)),
                  1e-15);
        const auto once = cnot_full(s, c, t, ideal_spin_photon_map(), Spin::Minus);
        const auto twice =
            cnot_full(once.post_state, c, t, ideal_spin_photon_map(), Spin::Plus);
        EXPECT_LT(ket_distance(to_ket(twice.post_state), to_ket(s)), 1e-12);
    }
}

TEST(Cnot, SampledSpinOutcomesAreFair) {
    Rng rng = derive_stream(3, 0);
    int minus = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        minus += cnot_full(ket("LR"), 2, 1, ideal_spin_photon_map(), rng).spin_result ==
                 Spin::Minus;
    }
    EXPECT_NEAR(static_cast<double>(minus) / n, 0.5, 4 * std::sqrt(0.25 / n));
}

// Oracle fidelity from the dense circuit, renormalized or not.
double oracle_fidelity(const CavityParams &p, const Coeffs &k, Spin s, bool renorm) {
    const auto out = oracle::apply(oracle::cnot_circuit(oracle_factors(p)), dense_input(k));
    const std::size_t off = s == Spin::Plus ? 0 : 4;
    std::array<oracle::C, 4> branch{out[off], out[off + 1], out[off + 2], out[off + 3]};
    if (s == Spin::Minus) {
        std::swap(branch[0], branch[2]); // X on photon 1
        std::swap(branch[1], branch[3]);
    }
    const std::array<oracle::C, 4> ideal{k.a, k.d, k.c, k.b}; // RR, RL, LR, LL
    oracle::C ov = 0.0;
    double bn = 0.0;
    double jn = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        ov += std::conj(ideal[i]) * branch[i];
        bn += std::norm(branch[i]);
    }
    for (const auto &a : out) {
        jn += std::norm(a);
    }
    return renorm ? std::norm(ov) / bn : std::norm(ov) * jn / bn;
}

TEST(Cnot, FidelityMatchesDenseOracle) {
    CavityParams p;
    p.g = 0.3;
    p.kappa = 26.0;
    for (double gamma : {0.013, 0.0004}) {
        p.gamma = gamma;
        for (Spin s : {Spin::Plus, Spin::Minus}) {
            for (bool renorm : {true, false}) {
                const FidelityNorm fn =
                    renorm ? FidelityNorm::Renormalized : FidelityNorm::Unnormalized;
                double avg = 0.0;
                for (int b = 0; b < 4; ++b) {
                    Coeffs k{};
                    (b == 0 ? k.a : b == 1 ? k.b : b == 2 ? k.c : k.d) = 1.0;
                    avg += oracle_fidelity(p, k, s, renorm) / 4.0;
                }
                EXPECT_NEAR(cnot_fidelity(p, FidelityInput::BasisAverage, s, fn), avg, 1e-12);
                const Coeffs uni{0.5, 0.5, 0.5, 0.5};
                EXPECT_NEAR(cnot_fidelity(p, FidelityInput::Uniform, s, fn),
                            oracle_fidelity(p, uni, s, renorm), 1e-12);
            }
        }
    }
}

TEST(Cnot, IdealCavityGivesUnitFidelity) {
    const CavityParams p = CavityParams::from_ratios(1e6, 1e9);
    for (Spin s : {Spin::Plus, Spin::Minus}) {
        EXPECT_NEAR(cnot_fidelity(p, FidelityInput::BasisAverage, s), 1.0, 1e-9);
    }
}

TEST(Cnot, UniformInputIsInsensitiveToCoupling) {
    // The uniform input is a +1 eigenvector of X on the target: any
    // spin-controlled target flip leaves it invariant.
    for (double ratio : {0.05, 1.0, 30.0}) {
        const CavityParams p = CavityParams::from_ratios(ratio, ratio);
        EXPECT_NEAR(cnot_fidelity(p, FidelityInput::Uniform, Spin::Plus), 1.0, 1e-12);
    }
}

TEST(Cnot, FidelityInputValidation) {
    const CavityParams p = CavityParams::from_ratios(1.0, 10.0);
    EXPECT_THROW(cnot_fidelity(p, ket("RRR"), Spin::Plus), std::invalid_argument);
    EXPECT_THROW(cnot_fidelity(p, ket("RR+"), Spin::Plus), std::invalid_argument);
}

TEST(Cnot, SurfaceShape) {
    const auto pts = fidelity_surface({0.1, 1.0}, {1.0, 10.0, 100.0});
    EXPECT_EQ(pts.size(), 12u);
    for (const auto &pt : pts) {
        EXPECT_GE(pt.fidelity, 0.0);
        EXPECT_LE(pt.fidelity, 1.0 + 1e-12);
    }
}

} // namespace
