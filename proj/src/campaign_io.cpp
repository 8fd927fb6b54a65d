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

#include "subthz/error.hpp"
#include "subthz/measurement.hpp"
#include "subthz/text_io.hpp"

#include <json.hpp>

#include <array>
#include <fstream>
#include <sstream>

namespace subthz {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
T field(const nlohmann::json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw ParseError(where + ": missing field '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(where + ": field '" + key + "' has the wrong type");
    }
}

std::pair<double, double> pair_field(const nlohmann::json& obj, const char* key, const std::string& where) {
    const auto v = field<std::vector<double>>(obj, key, where);
    if (v.size() != 2)
        throw ParseError(where + ": field '" + key + "' must be a [low, high] pair");
    return {v[0], v[1]};
}

template <typename E, typename F>
E enum_field(const nlohmann::json& obj, const char* key, const std::string& where, F parse) {
    const auto s = field<std::string>(obj, key, where);
    try {
        return parse(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), Eigen::Index(v.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
}

CampaignMeta parse_meta(const nlohmann::json& j) {
    const std::string where = "meta";
    if (!j.is_object())
        throw ParseError("meta must be an object");
    CampaignMeta m;
    m.name = field<std::string>(j, "name", where);
    m.environment = enum_field<Environment>(j, "environment", where, parse_environment);
    m.site = field<std::string>(j, "site", where);
    m.rf_band_ghz = pair_field(j, "rf_band_ghz", where);
    m.tx_height_m = field<double>(j, "tx_height_m", where);
    m.rx_height_m = field<double>(j, "rx_height_m", where);
    m.eirp_dbm = field<double>(j, "eirp_dbm", where);
    m.azimuth_step_deg = field<double>(j, "azimuth_step_deg", where);
    m.link_distance_range_m = pair_field(j, "link_distance_range_m", where);
    return m;
}

LinkRecord parse_link(const nlohmann::json& j, std::size_t index) {
    std::string where = "links[" + std::to_string(index) + "]";
    if (!j.is_object())
        throw ParseError(where + " must be an object");
    LinkRecord link;
    link.id = field<std::string>(j, "id", where);
    where += " ('" + link.id + "')";
    link.distance_m = field<double>(j, "distance_m", where);
    link.condition = enum_field<Condition>(j, "condition", where, parse_condition);

    const bool has_scan = j.contains("scan");
    const bool has_mpcs = j.contains("mpcs");
    if (has_scan == has_mpcs)
        throw ParseError(where + ": exactly one of 'scan' or 'mpcs' is required");
    if (has_scan) {
        const auto& s = j.at("scan");
        if (!s.is_object())
            throw ParseError(where + ": 'scan' must be an object");
        link.payload = make_scan(to_vector(field<std::vector<double>>(s, "azimuth_deg", where + ".scan")),
                                 to_vector(field<std::vector<double>>(s, "gain_db", where + ".scan")));
    } else {
        const auto& arr = j.at("mpcs");
        if (!arr.is_array())
            throw ParseError(where + ": 'mpcs' must be an array");
        MpcList list;
        for (const auto& m : arr) {
            if (!m.is_object())
                throw ParseError(where + ": MPC entries must be objects");
            list.push_back({field<double>(m, "azimuth_deg", where + ".mpcs"), field<double>(m, "gain_db", where + ".mpcs")});
        }
        link.payload = std::move(list);
    }
    return link;
}

constexpr std::array<std::string_view, 9> csv_columns{"id", "distance_m", "condition", "az1", "g1",
                                                      "az2", "g2",         "az3",       "g3"};

} // namespace

Campaign parse_campaign_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("campaign must be a JSON object");

    Campaign c;
    if (j.contains("meta") && !j.at("meta").is_null())
        c.meta = parse_meta(j.at("meta"));
    if (!j.contains("links") || !j.at("links").is_array())
        throw ParseError("campaign requires a 'links' array");
    std::size_t i = 0;
    for (const auto& l : j.at("links"))
        c.links.push_back(parse_link(l, i++));
    return c;
}

Campaign parse_campaign_csv(const std::string& text) {
    Campaign c;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        const auto cells = split_csv_line(line);
        const std::string where = "line " + std::to_string(line_no);
        if (!header_seen) {
            if (cells.size() != csv_columns.size())
                throw ParseError(where + ": expected header id,distance_m,condition,az1,g1,az2,g2,az3,g3");
            for (std::size_t k = 0; k < cells.size(); ++k)
                if (trim(cells[k]) != csv_columns[k])
                    throw ParseError(where + ": unexpected header column '" + cells[k] + "'");
            header_seen = true;
            continue;
        }
        if (cells.size() != csv_columns.size())
            throw ParseError(where + ": expected 9 cells, got " + std::to_string(cells.size()));

        LinkRecord link;
        link.id = std::string(trim(cells[0]));
        link.distance_m = parse_double(cells[1], where + " distance_m");
        try {
            link.condition = parse_condition(trim(cells[2]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
        MpcList list;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto az = trim(cells[3 + 2 * k]);
            const auto g = trim(cells[4 + 2 * k]);
            if (az.empty() && g.empty())
                continue;
            if (az.empty() || g.empty())
                throw ParseError(where + ": MPC " + std::to_string(k + 1) + " needs both azimuth and gain");
            list.push_back({parse_double(az, where + " az"), parse_double(g, where + " gain")});
        }
        link.payload = std::move(list);
        c.links.push_back(std::move(link));
    }
    if (!header_seen)
        throw ParseError("CSV campaign has no header");
    return c;
}

Campaign load_campaign(const std::filesystem::path& path, CampaignFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();

    Campaign c = format == CampaignFormat::json ? parse_campaign_json(ss.str()) : parse_campaign_csv(ss.str());
    auto violations = validate_campaign(c, &c.warnings);
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return c;
}

Campaign load_campaign(const std::filesystem::path& path) {
    return load_campaign(path, path.extension() == ".csv" ? CampaignFormat::csv : CampaignFormat::json);
}

std::string to_json_string(const Campaign& campaign) {
    ordered_json j;
    if (campaign.meta) {
        const auto& m = *campaign.meta;
        ordered_json meta;
        meta["name"] = m.name;
        meta["environment"] = to_string(m.environment);
        meta["site"] = m.site;
        meta["rf_band_ghz"] = {m.rf_band_ghz.first, m.rf_band_ghz.second};
        meta["tx_height_m"] = m.tx_height_m;
        meta["rx_height_m"] = m.rx_height_m;
        meta["eirp_dbm"] = m.eirp_dbm;
        meta["azimuth_step_deg"] = m.azimuth_step_deg;
        meta["link_distance_range_m"] = {m.link_distance_range_m.first, m.link_distance_range_m.second};
        j["meta"] = std::move(meta);
    }
    ordered_json links = ordered_json::array();
    for (const auto& link : campaign.links) {
        ordered_json l;
        l["id"] = link.id;
        l["distance_m"] = link.distance_m;
        l["condition"] = to_string(link.condition);
        if (const auto* list = std::get_if<MpcList>(&link.payload)) {
            ordered_json arr = ordered_json::array();
            for (const auto& m : *list) {
                ordered_json e;
                e["azimuth_deg"] = m.azimuth_deg;
                e["gain_db"] = m.gain_db;
                arr.push_back(std::move(e));
            }
            l["mpcs"] = std::move(arr);
        } else {
            const auto& s = std::get<DirectionalScan>(link.payload);
            ordered_json scan;
            scan["azimuth_deg"] = to_std(s.azimuth_deg);
            scan["gain_db"] = to_std(s.gain_db);
            l["scan"] = std::move(scan);
        }
        links.push_back(std::move(l));
    }
    j["links"] = std::move(links);
    return j.dump(2) + "\n";
}

std::string to_csv_string(const Campaign& campaign) {
    std::string out = "id,distance_m,condition,az1,g1,az2,g2,az3,g3\n";
    for (const auto& link : campaign.links) {
        const auto* list = std::get_if<MpcList>(&link.payload);
        if (!list || list->size() > 3)
            throw std::invalid_argument("CSV campaigns hold at most 3 MPCs per link and no scans (link '" + link.id +
                                        "')");
        out += link.id + "," + format_double(link.distance_m) + "," + std::string(to_string(link.condition));
        for (std::size_t k = 0; k < 3; ++k) {
            if (k < list->size())
                out += "," + format_double((*list)[k].azimuth_deg) + "," + format_double((*list)[k].gain_db);
            else
                out += ",,";
        }
        out += "\n";
    }
    return out;
}

} // namespace subthz
