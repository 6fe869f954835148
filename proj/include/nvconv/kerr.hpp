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
 * Cross-Kerr phase tagging against a coherent probe and X-quadrature
 * homodyne discrimination of the tagged probe states.
 *
 * The probe is tracked symbolically: a photonic basis component with k
 * L-polarized photons leaves the probe in |alpha e^{i k theta}>, so only
 * the integer tag k is stored.
 */

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nvconv/rng.hpp"
#include "nvconv/state.hpp"

namespace nvconv {

/// Unnormalized photonic branches keyed by probe phase multiple k.
struct KerrPartition {
    std::map<int, QuantumState> branches;
    double theta = 0.0;
    double alpha = 0.0;

    [[nodiscard]] std::vector<int> tags() const;
    [[nodiscard]] double weight(int tag) const; ///< squared branch norm
    [[nodiscard]] double total_weight() const;
};

KerrPartition apply_cross_kerr(const QuantumState &state, double theta,
                               double alpha);

/// Gaussian likelihood model of the X-quadrature readout.
class HomodyneModel {
  public:
    /// Throws "degenerate phase configuration" when two tags share a mean.
    HomodyneModel(double alpha, double theta, std::vector<int> tags);

    [[nodiscard]] double alpha() const { return alpha_; }
    [[nodiscard]] double theta() const { return theta_; }
    /// Tags in the order of strictly decreasing mean.
    [[nodiscard]] const std::vector<int> &tags() const { return tags_; }
    [[nodiscard]] const std::vector<double> &means() const { return means_; }
    /// Midpoints between neighbouring means, decreasing.
    [[nodiscard]] const std::vector<double> &thresholds() const {
        return thresholds_;
    }
    [[nodiscard]] double mean_of(int tag) const;

    /// Maximum-likelihood tag for a quadrature reading.
    [[nodiscard]] int classify(double x) const;

  private:
    double alpha_;
    double theta_;
    std::vector<int> tags_;
    std::vector<double> means_;
    std::vector<double> thresholds_;
};

/// 2 alpha cos(k theta).
double homodyne_mean(double alpha, int k, double theta);

/// Position-space amplitude (2 pi)^{-1/4} exp[-(x - 2 alpha cos k theta)^2 / 4].
double homodyne_amplitude(double x, double alpha, int k, double theta);

/// |amplitude|^2: unit-variance Gaussian density.
double homodyne_pdf(double x, double alpha, int k, double theta);

enum class HomodyneMode { Ideal, Gaussian };

struct HomodyneResult {
    int reported_tag = 0;  ///< tag the classifier hands to feed-forward
    int true_tag = 0;      ///< branch the signal actually collapsed onto
    QuantumState state;    ///< renormalized to the partition's total norm
    double probability = 0.0;
    std::optional<double> quadrature; ///< sampled x (gaussian mode only)

    [[nodiscard]] bool misclassified() const { return reported_tag != true_tag; }
};

/// Samples a branch by weight, then (gaussian mode) draws x around that
/// branch's mean and reports the model's classification. Branches need not
/// be among the model's tags; such readouts are always misclassified.
HomodyneResult homodyne_measure(const KerrPartition &part,
                                const HomodyneModel &model, HomodyneMode mode,
                                Rng &rng);

/// Collapse onto `tag` with no classification noise.
HomodyneResult homodyne_measure(const KerrPartition &part,
                                const HomodyneModel &model, int tag);

/// Overlap error of two unit-variance Gaussians a distance x_d apart.
double error_probability(double x_d);

/// |mean(k_i) - mean(k_{i+1})| for adjacent entries of sorted `tags`.
std::vector<double> peak_distances(double alpha, double theta,
                                   std::span<const int> tags);

} // namespace nvconv
