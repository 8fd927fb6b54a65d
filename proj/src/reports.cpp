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

#include "subthz/reports.hpp"
#include "subthz/text_io.hpp"

#include <json.hpp>

namespace subthz {

std::string fit_report_json(std::span<const FitReport> reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["category"] = to_string(r.series.category);
        o["condition"] = r.condition;
        o["environment"] = r.environment;
        o["n"] = r.fit.params.n;
        o["sigma_db"] = r.fit.sigma_db;
        o["num_points"] = r.fit.num_points;
        o["fc_hz"] = r.fit.params.fc_hz;
        o["d0_m"] = r.fit.params.d0_m;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string fit_points_csv(std::span<const FitReport> reports) {
    std::string out = "condition,link_id,distance_m,measured_pl_db,predicted_pl_db,residual_db\n";
    for (const auto& r : reports) {
        for (Eigen::Index i = 0; i < r.series.size(); ++i) {
            const double measured = r.series.pathloss_db[i];
            const double residual = r.fit.residuals_db[i];
            out += r.condition + "," + r.series.link_ids[std::size_t(i)] + "," + format_double(r.series.distance_m[i]) +
                   "," + format_double(measured) + "," + format_double(measured - residual) + "," +
                   format_double(residual) + "\n";
        }
    }
    return out;
}

std::string fit_summary(std::span<const FitReport> reports) {
    std::string out;
    for (const auto& r : reports)
        out += std::string(to_string(r.series.category)) + " " + r.condition + ": n = " +
               format_fixed(r.fit.params.n, 2) + ", sigma = " + format_fixed(r.fit.sigma_db, 2) + " dB (N = " +
               std::to_string(r.fit.num_points) + ")\n";
    return out;
}

std::string asa_csv(std::span<const AsaSample> samples) {
    std::string out = "link_id,distance_m,condition,mu_asa_deg,s_a_deg\n";
    for (const auto& s : asa_vs_distance(samples))
        out += s.link_id + "," + format_double(s.distance_m) + "," + std::string(to_string(s.condition)) + "," +
               format_double(s.mu_asa_deg) + "," + format_double(s.s_a_deg) + "\n";
    return out;
}

std::string asa_aggregate_json(Environment environment, const std::optional<AsaStats>& los,
                               const std::optional<AsaStats>& nlos) {
    auto cell = [](const std::optional<AsaStats>& s) {
        if (!s)
            return nlohmann::ordered_json(nullptr);
        nlohmann::ordered_json o;
        o["mean_deg"] = s->mean_deg;
        o["std_deg"] = s->std_deg;
        o["count"] = s->count;
        return o;
    };
    nlohmann::ordered_json j;
    j["environment"] = to_string(environment);
    j["LoS"] = cell(los);
    j["NLoS"] = cell(nlos);
    return j.dump(2) + "\n";
}

} // namespace subthz
