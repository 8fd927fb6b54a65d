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

#include "subthz/measurement.hpp"
#include "subthz/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subthz {

namespace {

constexpr double full_circle_span_deg = 355.0;

} // namespace

DirectionalScan make_scan(Eigen::VectorXd azimuth_deg, Eigen::VectorXd gain_db) {
    DirectionalScan scan{std::move(azimuth_deg), std::move(gain_db), false};
    const auto n = scan.azimuth_deg.size();
    if (n >= 2) {
        const double step = scan.azimuth_deg[1] - scan.azimuth_deg[0];
        const double span = scan.azimuth_deg[n - 1] - scan.azimuth_deg[0] + step;
        scan.full_circle = span >= full_circle_span_deg;
    }
    return scan;
}

std::vector<Mpc> extract_mpcs(const DirectionalScan& scan, int max_count, double floor_db,
                              std::vector<std::string>* warnings) {
    const Eigen::Index n = scan.gain_db.size();
    if (n == 0)
        throw std::invalid_argument("extract_mpcs: empty scan");
    if (scan.azimuth_deg.size() != n)
        throw std::invalid_argument("extract_mpcs: azimuth and gain sizes differ");
    if (max_count < 1)
        throw std::invalid_argument("extract_mpcs: max_count must be >= 1");
    if (!(floor_db > 0.0))
        throw std::invalid_argument("extract_mpcs: floor_db must be positive");

    const auto& g = scan.gain_db;
    const double threshold = g.maxCoeff() - floor_db;

    std::vector<Eigen::Index> peaks;
    for (Eigen::Index i = 0; i < n; ++i) {
        bool above_left = true;
        bool above_right = true;
        if (scan.full_circle) {
            above_left = g[i] > g[(i + n - 1) % n];
            above_right = g[i] >= g[(i + 1) % n];
        } else {
            if (i > 0)
                above_left = g[i] > g[i - 1];
            if (i + 1 < n)
                above_right = g[i] >= g[i + 1];
        }
        if (above_left && above_right && g[i] >= threshold)
            peaks.push_back(i);
    }

    if (peaks.empty()) {
        if (warnings)
            warnings->push_back("scan has no local maximum; using first pointing");
        return {Mpc{scan.azimuth_deg[0], g[0]}};
    }

    std::stable_sort(peaks.begin(), peaks.end(), [&](Eigen::Index a, Eigen::Index b) { return g[a] > g[b]; });
    if (peaks.size() > static_cast<std::size_t>(max_count))
        peaks.resize(static_cast<std::size_t>(max_count));

    std::vector<Mpc> out;
    out.reserve(peaks.size());
    for (auto i : peaks)
        out.push_back({scan.azimuth_deg[i], g[i]});
    return out;
}

double synthesize_omnidirectional(std::span<const Mpc> mpcs) {
    if (mpcs.empty())
        throw std::invalid_argument("synthesize_omnidirectional: no MPCs");
    const double peak =
        std::max_element(mpcs.begin(), mpcs.end(), [](const Mpc& a, const Mpc& b) { return a.gain_db < b.gain_db; })
            ->gain_db;
    double sum = 0.0;
    for (const auto& m : mpcs)
        sum += std::pow(10.0, (m.gain_db - peak) / 10.0);
    return -(peak + 10.0 * std::log10(sum));
}

std::vector<Mpc> resolve_mpcs(const LinkRecord& link, const MpcOptions& options, std::vector<std::string>* warnings) {
    if (const auto* list = std::get_if<MpcList>(&link.payload))
        return *list;
    std::vector<std::string> local;
    auto mpcs = extract_mpcs(std::get<DirectionalScan>(link.payload), options.max_count, options.floor_db, &local);
    if (warnings)
        for (auto& w : local)
            warnings->push_back(link.id + ": " + w);
    return mpcs;
}

namespace {

// rank 0 is the power sum of every component
SeriesResult build_series(std::span<const LinkRecord> links, int rank, Category category,
                          const MpcOptions& options) {
    std::vector<std::size_t> order(links.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return links[a].id < links[b].id; });

    SeriesResult result;
    std::vector<double> distance;
    std::vector<double> pathloss;
    for (auto idx : order) {
        const auto& link = links[idx];
        const auto mpcs = resolve_mpcs(link, options, &result.warnings);
        if (mpcs.size() < static_cast<std::size_t>(std::max(rank, 1))) {
            result.skipped.push_back(link.id);
            continue;
        }
        const double pl = rank == 0 ? synthesize_omnidirectional(mpcs) : -mpcs[static_cast<std::size_t>(rank - 1)].gain_db;
        if (!(pl > 0.0)) {
            result.warnings.push_back(link.id + ": non-positive path loss, link skipped");
            result.skipped.push_back(link.id);
            continue;
        }
        distance.push_back(link.distance_m);
        pathloss.push_back(pl);
        result.series.link_ids.push_back(link.id);
    }
    if (distance.empty())
        throw ComputationError("path loss series for category '" + std::string(to_string(category)) + "' is empty");

    result.series.category = category;
    result.series.distance_m = Eigen::Map<const Eigen::VectorXd>(distance.data(), Eigen::Index(distance.size()));
    result.series.pathloss_db = Eigen::Map<const Eigen::VectorXd>(pathloss.data(), Eigen::Index(pathloss.size()));
    return result;
}

} // namespace

SeriesResult pathloss_series(std::span<const LinkRecord> links, Category category, const MpcOptions& options) {
    return build_series(links, mpc_rank(category), category, options);
}

SeriesResult detail::kth_strongest_series(std::span<const LinkRecord> links, int k, const MpcOptions& options) {
    if (k < 1)
        throw std::invalid_argument("kth_strongest_series: k must be >= 1");
    const Category label = k == 1 ? Category::directional : k == 2 ? Category::second_strongest : Category::third_strongest;
    return build_series(links, k, label, options);
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate_campaign(const Campaign& campaign, std::vector<std::string>* warnings) {
    std::vector<std::string> v;
    const auto& meta = campaign.meta;

    if (meta) {
        const auto [lo, hi] = meta->rf_band_ghz;
        if (!(lo < hi))
            v.push_back("meta: rf_band_ghz low must be below high");
        if (!(lo >= 100.0 && lo <= 350.0 && hi >= 100.0 && hi <= 350.0))
            v.push_back("meta: rf_band_ghz must lie within [100, 350] GHz");
        const double step = meta->azimuth_step_deg;
        if (!(step > 0.0 && step <= 30.0))
            v.push_back("meta: azimuth_step_deg must be in (0, 30]");
        else if (step != 5.0 && step != 6.0 && step != 10.0 && warnings)
            warnings->push_back("meta: unusual azimuth_step_deg " + std::to_string(step));
        const auto [dlo, dhi] = meta->link_distance_range_m;
        if (!(dlo >= 1.0))
            v.push_back("meta: link_distance_range_m low must be >= 1 m");
        if (!(dlo <= dhi))
            v.push_back("meta: link_distance_range_m low exceeds high");
    }

    if (campaign.links.empty())
        v.push_back("campaign has no links");

    std::vector<std::string> ids;
    for (const auto& link : campaign.links) {
        const std::string tag = "link '" + link.id + "': ";
        if (link.id.empty())
            v.push_back("link with empty id");
        ids.push_back(link.id);

        if (!(link.distance_m > 0.0) || !std::isfinite(link.distance_m))
            v.push_back(tag + "distance_m must be positive");
        else if (meta && (link.distance_m < meta->link_distance_range_m.first ||
                          link.distance_m > meta->link_distance_range_m.second))
            v.push_back(tag + "distance_m outside campaign link_distance_range_m");

        if (const auto* list = std::get_if<MpcList>(&link.payload)) {
            if (list->empty())
                v.push_back(tag + "MPC list is empty");
            for (std::size_t i = 0; i < list->size(); ++i) {
                const auto& m = (*list)[i];
                if (!(m.azimuth_deg >= 0.0 && m.azimuth_deg < 360.0))
                    v.push_back(tag + "MPC " + std::to_string(i) + " azimuth outside [0, 360)");
                if (!std::isfinite(m.gain_db))
                    v.push_back(tag + "MPC " + std::to_string(i) + " gain is not finite");
                if (i > 0 && m.gain_db > (*list)[i - 1].gain_db)
                    v.push_back(tag + "MPC list not sorted by descending gain");
            }
        } else {
            const auto& scan = std::get<DirectionalScan>(link.payload);
            const auto n = scan.azimuth_deg.size();
            if (n == 0)
                v.push_back(tag + "scan is empty");
            if (scan.gain_db.size() != n) {
                v.push_back(tag + "scan azimuth and gain lengths differ");
                continue;
            }
            if (!scan.gain_db.allFinite())
                v.push_back(tag + "scan gain is not finite");
            if (n > 0 && ((scan.azimuth_deg.array() < 0.0).any() || (scan.azimuth_deg.array() >= 360.0).any()))
                v.push_back(tag + "scan azimuth outside [0, 360)");
            if (n >= 2) {
                const Eigen::VectorXd spacing = scan.azimuth_deg.tail(n - 1) - scan.azimuth_deg.head(n - 1);
                const double step = meta ? meta->azimuth_step_deg : spacing[0];
                if ((spacing.array() <= 0.0).any())
                    v.push_back(tag + "scan azimuth not strictly increasing");
                else if (((spacing.array() - step).abs() > 1e-6).any())
                    v.push_back(tag + "scan spacing differs from azimuth step");
            }
        }
    }

    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i] == ids[i - 1] && (i < 2 || ids[i - 2] != ids[i]))
            v.push_back("duplicate link id '" + ids[i] + "'");
    return v;
}

} // namespace subthz
