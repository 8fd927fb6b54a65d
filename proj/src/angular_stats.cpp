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

#include "subthz/angular_stats.hpp"
#include "subthz/error.hpp"

#include <algorithm>

namespace subthz {

namespace {

struct AngleWeights {
    Eigen::VectorXd angle_deg;
    Eigen::VectorXd amplitude;
};

AngleWeights prepare(std::span<const Mpc> mpcs, const AsaOptions& options) {
    if (mpcs.empty())
        throw std::invalid_argument("ASA requires at least one MPC");
    if (mpcs.size() > asa_max_mpcs)
        throw std::invalid_argument("ASA uses at most 3 MPCs, got " + std::to_string(mpcs.size()));

    const auto strongest =
        std::max_element(mpcs.begin(), mpcs.end(), [](const Mpc& a, const Mpc& b) { return a.gain_db < b.gain_db; });
    if (!std::isfinite(strongest->gain_db))
        throw std::invalid_argument("ASA: all amplitudes are zero");

    const auto n = Eigen::Index(mpcs.size());
    AngleWeights aw{Eigen::VectorXd(n), Eigen::VectorXd(n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        double phi = mpcs[std::size_t(i)].azimuth_deg;
        if (options.unwrap_about_strongest) {
            const double ref = strongest->azimuth_deg;
            while (phi <= ref - 180.0)
                phi += 360.0;
            while (phi > ref + 180.0)
                phi -= 360.0;
        }
        aw.angle_deg[i] = phi;
        aw.amplitude[i] = std::pow(10.0, (mpcs[std::size_t(i)].gain_db - strongest->gain_db) / 20.0);
    }
    return aw;
}

double wrap_360(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0)
        w += 360.0;
    return w >= 360.0 ? 0.0 : w;
}

} // namespace

double mu_asa(std::span<const Mpc> mpcs, const AsaOptions& options) {
    const auto aw = prepare(mpcs, options);
    const double mu = weighted_mean_angle(aw.angle_deg, aw.amplitude);
    return options.unwrap_about_strongest ? wrap_360(mu) : mu;
}

double asa(std::span<const Mpc> mpcs, const AsaOptions& options) {
    const auto aw = prepare(mpcs, options);
    return weighted_angle_spread(aw.angle_deg, aw.amplitude);
}

AsaSample asa_sample(const LinkRecord& link, Environment environment, const MpcOptions& mpc_options,
                     const AsaOptions& options) {
    auto mpcs = resolve_mpcs(link, mpc_options);
    if (mpcs.size() > asa_max_mpcs)
        mpcs.resize(asa_max_mpcs);
    return {link.id, mu_asa(mpcs, options), asa(mpcs, options), link.distance_m, link.condition, environment};
}

AsaStats aggregate_asa(std::span<const AsaSample> samples, Environment environment, Condition condition) {
    std::vector<double> values;
    for (const auto& s : samples)
        if (s.environment == environment && s.condition == condition)
            values.push_back(s.s_a_deg);
    if (values.empty())
        throw ComputationError("no ASA samples for " + std::string(to_string(environment)) + " " +
                               std::string(to_string(condition)));

    const Eigen::Map<const Eigen::VectorXd> v(values.data(), Eigen::Index(values.size()));
    AsaStats stats;
    stats.count = values.size();
    stats.mean_deg = v.mean();
    if (stats.count > 1)
        stats.std_deg = std::sqrt((v.array() - stats.mean_deg).square().sum() / double(stats.count - 1));
    return stats;
}

std::vector<AsaSample> asa_vs_distance(std::span<const AsaSample> samples) {
    std::vector<AsaSample> out(samples.begin(), samples.end());
    std::stable_sort(out.begin(), out.end(), [](const AsaSample& a, const AsaSample& b) {
        if (a.distance_m != b.distance_m)
            return a.distance_m < b.distance_m;
        return a.link_id < b.link_id;
    });
    return out;
}

} // namespace subthz
