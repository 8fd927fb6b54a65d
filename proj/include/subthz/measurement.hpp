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

#ifndef SUBTHZ_MEASUREMENT_HPP
#define SUBTHZ_MEASUREMENT_HPP

#include "subthz/series.hpp"
#include "subthz/types.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace subthz {

// Campaign-level metadata. Gains in link payloads are path gains with EIRP
// and antenna gains already removed; eirp_dbm is informational.
struct CampaignMeta {
    std::string name;
    Environment environment = Environment::outdoor;
    std::string site;
    std::pair<double, double> rf_band_ghz{140.0, 144.0};
    double tx_height_m = 0.0;
    double rx_height_m = 0.0;
    double eirp_dbm = 0.0;
    double azimuth_step_deg = 5.0;
    std::pair<double, double> link_distance_range_m{1.0, 1000.0};
};

// One multipath component: arrival azimuth and path gain (dB, usually <= 0).
struct Mpc {
    double azimuth_deg = 0.0;
    double gain_db = 0.0;

    friend bool operator==(const Mpc&, const Mpc&) = default;
};

// Received path gain per receiver pointing over an azimuth sweep.
struct DirectionalScan {
    Eigen::VectorXd azimuth_deg;
    Eigen::VectorXd gain_db;
    // Coverage span (last - first + step) of at least 355 degrees; neighbor
    // comparisons then wrap around. Set by make_scan().
    bool full_circle = false;
};

// Builds a scan and derives its full-circle flag. The step is taken from the
// first spacing; scans with fewer than two pointings are never full circle.
DirectionalScan make_scan(Eigen::VectorXd azimuth_deg, Eigen::VectorXd gain_db);

using MpcList = std::vector<Mpc>;

struct LinkRecord {
    std::string id;
    double distance_m = 0.0;  // 3-D Tx-Rx separation
    Condition condition = Condition::los;
    std::variant<DirectionalScan, MpcList> payload;
};

struct Campaign {
    std::optional<CampaignMeta> meta;
    std::vector<LinkRecord> links;
    std::vector<std::string> warnings;  // non-fatal findings from validation
};

enum class CampaignFormat { json, csv };

struct MpcOptions {
    int max_count = 16;
    double floor_db = 25.0;  // dynamic range below the strongest pointing
};

// ---------------------------------------------------------------------------
// Ingestion

// Reads, parses and validates a campaign. Throws ParseError for malformed
// files and ValidationError listing every violated invariant.
Campaign load_campaign(const std::filesystem::path& path, CampaignFormat format);
Campaign load_campaign(const std::filesystem::path& path);  // format from extension

Campaign parse_campaign_json(const std::string& text);
Campaign parse_campaign_csv(const std::string& text);

// Returns the violated invariants; warnings are appended to `warnings` when
// non-null. An empty result means the campaign is valid.
std::vector<std::string> validate_campaign(const Campaign& campaign, std::vector<std::string>* warnings = nullptr);

// Canonical serializations. JSON field order is fixed, so parse followed by
// serialize is byte-stable. CSV supports MPC payloads with up to 3 MPCs.
std::string to_json_string(const Campaign& campaign);
std::string to_csv_string(const Campaign& campaign);

// ---------------------------------------------------------------------------
// Multipath components and path-loss series

/// Local maxima of gain versus azimuth that lie within floor_db of the global
/// peak, strongest first, at most max_count of them. A pointing is a local
/// maximum when it is strictly above its left neighbor and not below its right
/// neighbor, so a plateau yields its first pointing. Neighbors wrap for
/// full-circle scans and are clamped otherwise. A scan without any local
/// maximum (all gains equal) yields the first pointing and a warning.
std::vector<Mpc> extract_mpcs(const DirectionalScan& scan, int max_count, double floor_db,
                              std::vector<std::string>* warnings = nullptr);

/// Path loss of the power sum of all components: -10 log10(sum 10^(g/10)).
double synthesize_omnidirectional(std::span<const Mpc> mpcs);

// MPCs of a link ordered strongest first: the stored list, or the result of
// extract_mpcs() for scans.
std::vector<Mpc> resolve_mpcs(const LinkRecord& link, const MpcOptions& options = {},
                              std::vector<std::string>* warnings = nullptr);

struct SeriesResult {
    PathLossSeries series;
    std::vector<std::string> skipped;  // links lacking the requested MPC rank
    std::vector<std::string> warnings;
};

/// Per-link path loss for one modeling category, ordered by link id.
/// Throws ComputationError when no link contributes a point.
SeriesResult pathloss_series(std::span<const LinkRecord> links, Category category,
                             const MpcOptions& options = {});

namespace detail {

// Path loss of the k-th strongest MPC for any k >= 1. The public entry point
// exposes only k in {1, 2, 3} through Category.
SeriesResult kth_strongest_series(std::span<const LinkRecord> links, int k, const MpcOptions& options);

} // namespace detail

} // namespace subthz

#endif
