// SPDX-License-Identifier: Apache-2.0
//
// subthz: close-in path loss, angular spread and link budget toolkit
// Copyright (C) 2026 The subthz authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Azimuth spread of arrival (ASA) over the strongest multipath components
// of a link. Angles enter linearly, without circular statistics:
//
//   mu  = sum(phi_i a_i^2) / sum(a_i^2)
//   S_A = sqrt( sum((phi_i - mu)^2 a_i^2) / sum(a_i^2) )

#ifndef SUBTHZ_ANGULAR_STATS_HPP
#define SUBTHZ_ANGULAR_STATS_HPP

#include "subthz/measurement.hpp"
#include "subthz/types.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace subthz {

inline constexpr std::size_t asa_max_mpcs = 3;

/// Amplitude-squared weighted mean of the angles.
template <typename DerivedA, typename DerivedW>
typename DerivedA::Scalar weighted_mean_angle(const Eigen::MatrixBase<DerivedA>& angle_deg,
                                              const Eigen::MatrixBase<DerivedW>& amplitude) {
    using Scalar = typename DerivedA::Scalar;
    if (angle_deg.size() == 0 || angle_deg.size() != amplitude.size())
        throw std::invalid_argument("weighted_mean_angle: empty or mismatched input");
    const auto weight = amplitude.array().square();
    const Scalar total = weight.sum();
    if (!(total > Scalar(0)))
        throw std::invalid_argument("weighted_mean_angle: all amplitudes are zero");
    return (angle_deg.array() * weight).sum() / total;
}

/// Amplitude-squared weighted RMS spread of the angles about their weighted mean.
template <typename DerivedA, typename DerivedW>
typename DerivedA::Scalar weighted_angle_spread(const Eigen::MatrixBase<DerivedA>& angle_deg,
                                                const Eigen::MatrixBase<DerivedW>& amplitude) {
    using Scalar = typename DerivedA::Scalar;
    const Scalar mu = weighted_mean_angle(angle_deg, amplitude);
    const auto weight = amplitude.array().square();
    using std::sqrt;
    return sqrt(((angle_deg.array() - mu).square() * weight).sum() / weight.sum());
}

struct AsaOptions {
    // Map angles into (phi_1 - 180, phi_1 + 180] around the strongest MPC
    // before averaging. Off by default: angles are used as given.
    bool unwrap_about_strongest = false;
};

struct AsaSample {
    std::string link_id;
    double mu_asa_deg = 0.0;  // [0, 360)
    double s_a_deg = 0.0;
    double distance_m = 0.0;
    Condition condition = Condition::los;
    Environment environment = Environment::outdoor;
};

struct AsaStats {
    double mean_deg = 0.0;
    double std_deg = 0.0;  // sample std, divisor N - 1; 0 when count == 1
    std::size_t count = 0;
};

// At most asa_max_mpcs components; amplitudes 10^(g/20) normalized to the
// strongest. Throws std::invalid_argument on empty input, more than three
// MPCs, or all-zero amplitudes.
double mu_asa(std::span<const Mpc> mpcs, const AsaOptions& options = {});
double asa(std::span<const Mpc> mpcs, const AsaOptions& options = {});

// ASA of one link from its (up to) three strongest MPCs.
AsaSample asa_sample(const LinkRecord& link, Environment environment, const MpcOptions& mpc_options = {},
                     const AsaOptions& options = {});

// Mean and sample std of S_A over samples matching environment and
// condition. Throws ComputationError when nothing matches.
AsaStats aggregate_asa(std::span<const AsaSample> samples, Environment environment, Condition condition);

// Samples sorted by distance, ties broken by link id.
std::vector<AsaSample> asa_vs_distance(std::span<const AsaSample> samples);

} // namespace subthz

#endif
