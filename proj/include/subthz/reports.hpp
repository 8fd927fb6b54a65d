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

// Plot-ready report formats. Numbers are written at full precision; the
// human-readable summaries round to two decimals.

#ifndef SUBTHZ_REPORTS_HPP
#define SUBTHZ_REPORTS_HPP

#include "subthz/angular_stats.hpp"
#include "subthz/ci_model.hpp"
#include "subthz/series.hpp"

#include <optional>
#include <span>
#include <string>

namespace subthz {

struct FitReport {
    std::string condition;    // "LoS", "NLoS" or "all"
    std::string environment;  // "indoor", "outdoor" or "unknown"
    PathLossSeries series;
    CiFit<double> fit;
};

// JSON array of {category, condition, environment, n, sigma_db, num_points,
// fc_hz, d0_m}.
std::string fit_report_json(std::span<const FitReport> reports);

// CSV: condition,link_id,distance_m,measured_pl_db,predicted_pl_db,residual_db
std::string fit_points_csv(std::span<const FitReport> reports);

// One line per fit: "<category> <condition>: n = 2.10, sigma = 1.80 dB (N = 12)"
std::string fit_summary(std::span<const FitReport> reports);

// CSV: link_id,distance_m,condition,mu_asa_deg,s_a_deg, ordered by distance.
std::string asa_csv(std::span<const AsaSample> samples);

// {"environment": ..., "LoS": {mean_deg, std_deg, count} | null, "NLoS": ...}
std::string asa_aggregate_json(Environment environment, const std::optional<AsaStats>& los,
                               const std::optional<AsaStats>& nlos);

} // namespace subthz

#endif
