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

#include "subthz/synthesis.hpp"
#include "subthz/text_io.hpp"

#include <algorithm>
#include <string>

namespace subthz {

namespace {

constexpr std::size_t trials_per_block = 4096;

std::string link_id(int index, int count) {
    const auto width = std::max<std::size_t>(4, std::to_string(count).size());
    auto digits = std::to_string(index + 1);
    return "S" + std::string(width - digits.size(), '0') + digits;
}

} // namespace

std::vector<LinkRecord> generate_synthetic_campaign(const SynthesisConfig& cfg) {
    cfg.params.validate();
    if (!(cfg.sigma_db >= 0.0))
        throw std::invalid_argument("synthesis: sigma must be non-negative");

    std::vector<double> distances;
    if (cfg.distance_law == DistanceLaw::explicit_list) {
        if (cfg.distances_m.empty())
            throw std::invalid_argument("synthesis: explicit distance list is empty");
        distances = cfg.distances_m;
    } else {
        if (cfg.num_links < 1)
            throw std::invalid_argument("synthesis: num_links must be >= 1");
        const auto [lo, hi] = cfg.distance_range_m;
        if (!(lo >= cfg.params.d0_m) || !(hi >= lo))
            throw std::invalid_argument("synthesis: distance range must satisfy d0 <= low <= high");
    }
    for (double d : distances)
        if (!(d >= cfg.params.d0_m))
            throw std::invalid_argument("synthesis: explicit distance below reference distance");

    // Distances and shadowing come from separate substreams so that changing
    // the distance law leaves the shadowing sequence untouched.
    Rng distance_rng = substream(cfg.seed, 0);
    Rng shadow_rng = substream(cfg.seed, 1);

    const int count = cfg.distance_law == DistanceLaw::explicit_list ? int(distances.size()) : cfg.num_links;
    std::vector<LinkRecord> links;
    links.reserve(std::size_t(count));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto [lo, hi] = cfg.distance_range_m;
    for (int i = 0; i < count; ++i) {
        double d = 0.0;
        // clamped: pow() may round a hair outside the range
        switch (cfg.distance_law) {
        case DistanceLaw::log_uniform: d = std::clamp(lo * std::pow(hi / lo, unit(distance_rng)), lo, hi); break;
        case DistanceLaw::uniform: d = std::clamp(lo + (hi - lo) * unit(distance_rng), lo, hi); break;
        case DistanceLaw::explicit_list: d = distances[std::size_t(i)]; break;
        }
        const double pl = sample_pathloss(cfg.params, cfg.sigma_db, d, shadow_rng);
        links.push_back({link_id(i, count), d, cfg.condition, MpcList{Mpc{0.0, -pl}}});
    }
    return links;
}

double link_margin_db(const CiParams<double>& params, const LinkBudget& budget, double d_m) {
    return budget.eirp_dbm + budget.rx_gain_dbi - ci_predict(params, d_m) -
           (budget.noise_floor_dbm + budget.required_snr_db);
}

double outage_from_margin(double margin_db, double sigma_db) {
    if (!(sigma_db >= 0.0))
        throw std::invalid_argument("outage: sigma must be non-negative");
    if (sigma_db == 0.0)
        return margin_db > 0.0 ? 0.0 : margin_db < 0.0 ? 1.0 : 0.5;
    return 0.5 * std::erfc(margin_db / (sigma_db * std::sqrt(2.0)));
}

double outage_probability(const CiParams<double>& params, double sigma_db, const LinkBudget& budget, double d_m,
                          const OutageMode& mode) {
    const double margin = link_margin_db(params, budget, d_m);
    const auto* mc = std::get_if<MonteCarlo>(&mode);
    if (!mc || sigma_db == 0.0)
        return outage_from_margin(margin, sigma_db);
    if (mc->trials < 1)
        throw std::invalid_argument("outage: Monte Carlo needs at least one trial");

    std::size_t failures = 0;
    const std::size_t blocks = (mc->trials + trials_per_block - 1) / trials_per_block;
    for (std::size_t b = 0; b < blocks; ++b) {
        Rng rng = substream(mc->seed, b);
        std::normal_distribution<double> shadow(0.0, sigma_db);
        const std::size_t n = std::min(trials_per_block, mc->trials - b * trials_per_block);
        for (std::size_t t = 0; t < n; ++t)
            if (shadow(rng) > margin)
                ++failures;
    }
    return double(failures) / double(mc->trials);
}

std::string coverage_csv(const CoverageMap<double>& map) {
    std::string out = "x_m,y_m,distance_m,mean_rx_power_dbm,outage\n";
    for (Eigen::Index i = 0; i < map.x_m.rows(); ++i) {
        for (Eigen::Index j = 0; j < map.x_m.cols(); ++j) {
            out += format_double(map.x_m(i, j)) + "," + format_double(map.y_m(i, j)) + "," +
                   format_double(map.distance_m(i, j)) + ",";
            if (map.valid(i, j))
                out += format_double(map.mean_rx_power_dbm(i, j)) + "," + format_double(map.outage(i, j));
            else
                out += ",";
            out += "\n";
        }
    }
    return out;
}

} // namespace subthz
