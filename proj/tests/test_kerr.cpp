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

#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

#include "nvconv/kerr.hpp"
#include "support.hpp"

using namespace nvconv;
using testing_support::ket_distance;
using testing_support::to_ket;

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

// Half the overlap of two unit-variance Gaussians a distance d apart, at
// 50 significant digits.
Big big_error(Big d) {
    return boost::math::erfc(d / (2 * boost::multiprecision::sqrt(Big(2)))) / 2;
}

TEST(Kerr, PartitionByLCount) {
    const QuantumState s = superpose({{ket("RLR"), 1.0},
                                      {ket("LRR"), 1.0},
                                      {ket("RRL"), 1.0},
                                      {ket("LLL"), 1.0}});
    const KerrPartition part = apply_cross_kerr(s, 0.1, 3.0);
    EXPECT_EQ(part.tags(), (std::vector<int>{1, 3}));
    EXPECT_NEAR(part.weight(1), 0.75, 1e-15);
    EXPECT_NEAR(part.weight(3), 0.25, 1e-15);
    EXPECT_NEAR(part.total_weight(), 1.0, 1e-15);
    EXPECT_EQ(part.weight(2), 0.0);
    EXPECT_LT(ket_distance(to_ket(part.branches.at(3)), {{"LLL", 0.5}}), 1e-15);
    EXPECT_THROW(apply_cross_kerr(ket("RL+"), 0.1, 1.0), std::invalid_argument);
    EXPECT_THROW(apply_cross_kerr(ket("RL"), 0.1, -1.0), std::invalid_argument);
}

TEST(Kerr, DustDoesNotOpenTags) {
    std::vector<Complex> a(4);
    a[basis_index("RL")] = 1.0;
    a[basis_index("LL")] = 1e-17;
    EXPECT_EQ(apply_cross_kerr(QuantumState(2, false, a), 0.1, 1.0).tags(),
              (std::vector<int>{1}));
}

TEST(Kerr, ModelOrderingAndThresholds) {
    const HomodyneModel m(10.0, 0.1, {5, 1, 3});
    EXPECT_EQ(m.tags(), (std::vector<int>{1, 3, 5}));
    ASSERT_EQ(m.thresholds().size(), 2u);
    EXPECT_NEAR(m.means()[0], 20.0 * std::cos(0.1), 1e-13);
    EXPECT_NEAR(m.thresholds()[0], 10.0 * (std::cos(0.1) + std::cos(0.3)), 1e-13);
    EXPECT_EQ(m.classify(m.means()[0]), 1);
    EXPECT_EQ(m.classify(m.means()[1]), 3);
    EXPECT_EQ(m.classify(m.means()[2] - 100.0), 5);
    EXPECT_EQ(m.classify(m.thresholds()[0] + 1e-9), 1);
    EXPECT_EQ(m.classify(m.thresholds()[0] - 1e-9), 3);
    EXPECT_THROW((void)m.mean_of(2), std::invalid_argument);
}

TEST(Kerr, DegeneratePhases) {
    EXPECT_THROW(HomodyneModel(10.0, 0.0, {1, 3}), std::invalid_argument);
    EXPECT_THROW(HomodyneModel(10.0, std::numbers::pi, {1, 3}), std::invalid_argument);
    EXPECT_THROW(HomodyneModel(10.0, 0.1, {}), std::invalid_argument);
    EXPECT_NO_THROW(HomodyneModel(10.0, 0.1, {1}));
}

TEST(Kerr, PdfIsUnitGaussianAroundMean) {
    const double alpha = std::sqrt(1.3e4);
    for (int k : {1, 3, 5}) {
        const double mu = 2.0 * alpha * std::cos(0.1 * k);
        for (double dx : {-3.0, -0.5, 0.0, 1.7}) {
            EXPECT_NEAR(homodyne_pdf(mu + dx, alpha, k, 0.1), oracle::gauss(mu + dx, mu),
                        1e-15);
            const double amp = homodyne_amplitude(mu + dx, alpha, k, 0.1);
            EXPECT_NEAR(amp * amp, oracle::gauss(mu + dx, mu), 1e-15);
        }
        const double area = oracle::simpson(
            [&](double x) { return homodyne_pdf(x, alpha, k, 0.1); }, mu - 12, mu + 12, 2000);
        EXPECT_NEAR(area, 1.0, 1e-10);
    }
}

TEST(Kerr, ErrorProbabilityClosedForms) {
    EXPECT_EQ(error_probability(0.0), 0.5);
    EXPECT_THROW(error_probability(-1.0), std::invalid_argument);
    for (double d : {0.5, 2.0, 9.0, 17.7, 30.0}) {
        const double ref = static_cast<double>(big_error(Big(d)));
        EXPECT_NEAR(error_probability(d) / ref, 1.0, 1e-12) << d;
    }
}

TEST(Kerr, ErrorProbabilityIsTailBeyondMidpoint) {
    // Integrate one Gaussian past the midpoint threshold.
    const double d = 3.0;
    const double tail = oracle::simpson([&](double x) { return oracle::gauss(x, 0.0); },
                                        d / 2, d / 2 + 15.0, 4000);
    EXPECT_NEAR(error_probability(d), tail, 1e-12);
}

TEST(Kerr, ReferenceProbeParameters) {
    const double alpha = std::sqrt(1.3e4);
    const std::vector<int> tags{1, 3, 5};
    const auto d = peak_distances(alpha, 0.1, tags);
    ASSERT_EQ(d.size(), 2u);
    // Independent long-double evaluation of the mean separations.
    const long double a = std::sqrt(1.3e4L);
    const long double d1 = 2 * a * (std::cos(0.1L) - std::cos(0.3L));
    const long double d2 = 2 * a * (std::cos(0.3L) - std::cos(0.5L));
    EXPECT_NEAR(d[0], static_cast<double>(d1), 1e-11);
    EXPECT_NEAR(d[1], static_cast<double>(d2), 1e-11);
    EXPECT_NEAR(d[0], 9.05, 0.01);
    EXPECT_NEAR(d[1], 17.73, 0.01);
    const double p = error_probability(d[0]);
    EXPECT_LT(p, 1e-5);
    EXPECT_NEAR(p, static_cast<double>(big_error(Big(static_cast<double>(d1)))), 1e-17);
    EXPECT_NEAR(p, 3.05e-6, 0.005e-6);
}

TEST(Kerr, ForcedCollapseRenormalizesToPartition) {
    const QuantumState s = scale(
        superpose({{ket("RL"), 1.0}, {ket("LL"), std::sqrt(3.0)}}), 0.5);
    const KerrPartition part = apply_cross_kerr(s, 0.1, 5.0);
    const HomodyneModel m(5.0, 0.1, {1, 2});
    const HomodyneResult r = homodyne_measure(part, m, 2);
    EXPECT_EQ(r.true_tag, 2);
    EXPECT_FALSE(r.misclassified());
    EXPECT_NEAR(r.probability, 0.75, 1e-15);
    EXPECT_NEAR(r.state.norm(), 0.5, 1e-15);
    EXPECT_THROW(homodyne_measure(part, m, 0), std::invalid_argument);
}

TEST(Kerr, GaussianMisclassificationRate) {
    // alpha chosen so that the 1/3 peaks sit two standard deviations apart.
    const double theta = 0.1;
    const double alpha = 2.0 / (2.0 * (std::cos(theta) - std::cos(3 * theta)));
    const QuantumState s = superpose({{ket("RRL"), 1.0}, {ket("LLL"), 1.0}});
    const KerrPartition part = apply_cross_kerr(s, theta, alpha);
    const HomodyneModel m(alpha, theta, {1, 3});
    Rng rng = derive_stream(99, 0);
    const int n = 200000;
    int wrong = 0;
    for (int i = 0; i < n; ++i) {
        const HomodyneResult r = homodyne_measure(part, m, HomodyneMode::Gaussian, rng);
        ASSERT_TRUE(r.quadrature.has_value());
        wrong += r.misclassified();
    }
    const double p = error_probability(2.0);
    EXPECT_NEAR(static_cast<double>(wrong) / n, p, 4 * std::sqrt(p * (1 - p) / n));
}

TEST(Kerr, LeakedBranchOutsideModelIsMisclassified) {
    const QuantumState s = ket("RR");
    const KerrPartition part = apply_cross_kerr(s, 0.1, 100.0);
    const HomodyneModel m(100.0, 0.1, {1, 3});
    Rng rng = derive_stream(1, 0);
    const HomodyneResult r = homodyne_measure(part, m, HomodyneMode::Gaussian, rng);
    EXPECT_EQ(r.true_tag, 0);
    EXPECT_EQ(r.reported_tag, 1);
    EXPECT_TRUE(r.misclassified());
    const HomodyneResult ideal = homodyne_measure(part, m, HomodyneMode::Ideal, rng);
    EXPECT_EQ(ideal.reported_tag, 0);
    EXPECT_FALSE(ideal.quadrature.has_value());
}

} // namespace
