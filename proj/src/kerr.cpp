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

#include "nvconv/kerr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nvconv {

std::vector<int> KerrPartition::tags() const {
    std::vector<int> out;
    out.reserve(branches.size());
    for (const auto &[k, _] : branches) {
        out.push_back(k);
    }
    return out;
}

double KerrPartition::weight(int tag) const {
    const auto it = branches.find(tag);
    return it == branches.end() ? 0.0 : it->second.norm_squared();
}

double KerrPartition::total_weight() const {
    double sum = 0.0;
    for (const auto &[_, branch] : branches) {
        sum += branch.norm_squared();
    }
    return sum;
}

KerrPartition apply_cross_kerr(const QuantumState &state, double theta,
                               double alpha) {
    if (state.has_spin()) {
        throw std::invalid_argument("cross-Kerr tagging expects photons only");
    }
    if (!(alpha >= 0.0)) {
        throw std::invalid_argument("probe amplitude must be non-negative");
    }
    // Round-off dust must not open a spurious tag.
    const double dust = 1e-28 * state.norm_squared();
    std::map<int, std::vector<Complex>> amps;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (std::norm(state[i]) <= dust) {
            continue;
        }
        const int k = static_cast<int>(l_count(state, i));
        auto [it, inserted] = amps.try_emplace(k);
        if (inserted) {
            it->second.resize(state.dimension());
        }
        it->second[i] = state[i];
    }
    KerrPartition part;
    part.theta = theta;
    part.alpha = alpha;
    for (auto &[k, v] : amps) {
        part.branches.emplace(k, QuantumState(state.photons(), false, std::move(v)));
    }
    return part;
}

HomodyneModel::HomodyneModel(double alpha, double theta, std::vector<int> tags)
    : alpha_(alpha), theta_(theta), tags_(std::move(tags)) {
    if (!(alpha_ >= 0.0)) {
        throw std::invalid_argument("probe amplitude must be non-negative");
    }
    if (tags_.empty()) {
        throw std::invalid_argument("homodyne model needs at least one tag");
    }
    std::sort(tags_.begin(), tags_.end(), [theta](int a, int b) {
        return std::cos(a * theta) > std::cos(b * theta);
    });
    for (std::size_t i = 1; i < tags_.size(); ++i) {
        if (std::abs(std::cos(tags_[i] * theta) -
                     std::cos(tags_[i - 1] * theta)) <= 1e-9) {
            throw std::invalid_argument("degenerate phase configuration");
        }
    }
    for (int k : tags_) {
        means_.push_back(homodyne_mean(alpha_, k, theta_));
    }
    for (std::size_t i = 1; i < means_.size(); ++i) {
        thresholds_.push_back(0.5 * (means_[i - 1] + means_[i]));
    }
}

double HomodyneModel::mean_of(int tag) const {
    const auto it = std::find(tags_.begin(), tags_.end(), tag);
    if (it == tags_.end()) {
        throw std::invalid_argument("tag " + std::to_string(tag) +
                                    " not in homodyne model");
    }
    return means_[static_cast<std::size_t>(it - tags_.begin())];
}

int HomodyneModel::classify(double x) const {
    std::size_t slot = 0;
    while (slot < thresholds_.size() && x < thresholds_[slot]) {
        ++slot;
    }
    return tags_[slot];
}

double homodyne_mean(double alpha, int k, double theta) {
    return 2.0 * alpha * std::cos(k * theta);
}

double homodyne_amplitude(double x, double alpha, int k, double theta) {
    const double d = x - homodyne_mean(alpha, k, theta);
    return std::pow(2.0 * std::numbers::pi, -0.25) * std::exp(-0.25 * d * d);
}

double homodyne_pdf(double x, double alpha, int k, double theta) {
    const double d = x - homodyne_mean(alpha, k, theta);
    return std::exp(-0.5 * d * d) / std::sqrt(2.0 * std::numbers::pi);
}

namespace {

HomodyneResult collapse_to(const KerrPartition &part, int true_tag,
                           int reported_tag, std::optional<double> x) {
    const double total = part.total_weight();
    const auto it = part.branches.find(true_tag);
    if (it == part.branches.end() || total <= 0.0) {
        throw std::invalid_argument("tag " + std::to_string(true_tag) +
                                    " absent from partition");
    }
    const double p = it->second.norm_squared() / total;
    if (p <= 0.0) {
        throw std::invalid_argument("tag " + std::to_string(true_tag) +
                                    " has zero weight");
    }
    return {reported_tag, true_tag, scale(it->second, std::sqrt(1.0 / p)), p, x};
}

} // namespace

HomodyneResult homodyne_measure(const KerrPartition &part,
                                const HomodyneModel &model, HomodyneMode mode,
                                Rng &rng) {
    const double total = part.total_weight();
    if (part.branches.empty() || total <= 0.0) {
        throw std::invalid_argument("null state");
    }
    double u = uniform01(rng) * total;
    int true_tag = part.branches.rbegin()->first;
    for (const auto &[k, branch] : part.branches) {
        const double w = branch.norm_squared();
        if (w > 0.0 && u < w) {
            true_tag = k;
            break;
        }
        u -= w;
    }
    if (mode == HomodyneMode::Ideal) {
        return collapse_to(part, true_tag, true_tag, std::nullopt);
    }
    // A leaked branch outside the model still lands at its physical mean.
    std::normal_distribution<double> noise(
        homodyne_mean(model.alpha(), true_tag, model.theta()), 1.0);
    const double x = noise(rng);
    return collapse_to(part, true_tag, model.classify(x), x);
}

HomodyneResult homodyne_measure(const KerrPartition &part,
                                const HomodyneModel & /*model*/, int tag) {
    return collapse_to(part, tag, tag, std::nullopt);
}

double error_probability(double x_d) {
    if (!(x_d >= 0.0)) {
        throw std::invalid_argument("peak distance must be non-negative");
    }
    return 0.5 * std::erfc(x_d / (2.0 * std::numbers::sqrt2));
}

std::vector<double> peak_distances(double alpha, double theta,
                                   std::span<const int> tags) {
    std::vector<double> out;
    for (std::size_t i = 1; i < tags.size(); ++i) {
        out.push_back(std::abs(homodyne_mean(alpha, tags[i - 1], theta) -
                               homodyne_mean(alpha, tags[i], theta)));
    }
    return out;
}

} // namespace nvconv
