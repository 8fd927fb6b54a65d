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

#include "subthz/registry.hpp"
#include "subthz/error.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace subthz {

namespace {

using E = Environment;
using C = Condition;
using K = Category;

} // namespace

std::size_t ModelRegistry::index(Environment env, Condition cond, Category cat) noexcept {
    return (std::size_t(env) * 2 + std::size_t(cond)) * 4 + std::size_t(cat);
}

std::size_t ModelRegistry::index(Environment env, Condition cond) noexcept {
    return std::size_t(env) * 2 + std::size_t(cond);
}

const ModelRegistry& ModelRegistry::builtin() {
    static const ModelRegistry registry = [] {
        ModelRegistry r;
        const std::array<ModelEntry, pathloss_size> pl{{
            // indoor
            {E::indoor, C::los, K::directional, 2.1, 1.8, "Table II"},
            {E::indoor, C::los, K::omnidirectional, 1.8, 3.0, "Table II"},
            {E::indoor, C::los, K::second_strongest, 2.8, 8.5, "Table II"},
            {E::indoor, C::los, K::third_strongest, 3.1, 9.2, "Table II"},
            {E::indoor, C::nlos, K::directional, 2.9, 9.0, "Table II"},
            {E::indoor, C::nlos, K::omnidirectional, 2.3, 8.3, "Table II"},
            {E::indoor, C::nlos, K::second_strongest, 3.2, 9.1, "Table II"},
            {E::indoor, C::nlos, K::third_strongest, 3.5, 8.7, "Table II"},
            // outdoor
            {E::outdoor, C::los, K::directional, 2.0, 0.1, "Table III"},
            {E::outdoor, C::los, K::omnidirectional, 1.7, 1.3, "Table III"},
            {E::outdoor, C::los, K::second_strongest, 2.6, 8.7, "Table III"},
            {E::outdoor, C::los, K::third_strongest, 2.9, 8.4, "Table III"},
            {E::outdoor, C::nlos, K::directional, 2.6, 10.1, "Table III"},
            {E::outdoor, C::nlos, K::omnidirectional, 2.3, 11.9, "Table III"},
            {E::outdoor, C::nlos, K::second_strongest, 3.0, 9.0, "Table III"},
            {E::outdoor, C::nlos, K::third_strongest, 3.1, 8.0, "Table III"},
        }};
        const std::array<AsaEntry, asa_size> as{{
            {E::indoor, C::los, 52.3, 47.3, "Table IV"},
            {E::indoor, C::nlos, 38.5, 45.4, "Table IV"},
            {E::outdoor, C::los, 49.8, 53.0, "Table IV"},
            {E::outdoor, C::nlos, 46.1, 56.6, "Table IV"},
        }};
        for (const auto& e : pl)
            r.pathloss_[index(e.environment, e.condition, e.category)] = e;
        for (const auto& e : as)
            r.asa_[index(e.environment, e.condition)] = e;
        return r;
    }();
    return registry;
}

const ModelEntry& ModelRegistry::lookup(Environment env, Condition cond, Category cat) const noexcept {
    return pathloss_[index(env, cond, cat)];
}

const AsaEntry& ModelRegistry::lookup_asa(Environment env, Condition cond) const noexcept {
    return asa_[index(env, cond)];
}

ModelRegistry ModelRegistry::with_overrides_json(const std::string& json_text) const {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed registry JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("registry override must be a JSON object");

    ModelRegistry out = *this;
    std::vector<std::string> violations;
    try {
        std::set<std::size_t> seen;
        if (j.contains("pathloss")) {
            for (const auto& e : j.at("pathloss")) {
                ModelEntry m{parse_environment(e.at("environment").get<std::string>()),
                             parse_condition(e.at("condition").get<std::string>()),
                             parse_category(e.at("category").get<std::string>()),
                             e.at("n").get<double>(),
                             e.at("sigma_db").get<double>(),
                             e.value("source", std::string("override"))};
                const auto key = index(m.environment, m.condition, m.category);
                const std::string tag = std::string(to_string(m.environment)) + "/" +
                                        std::string(to_string(m.condition)) + "/" + std::string(to_string(m.category));
                if (!seen.insert(key).second)
                    violations.push_back("duplicate path loss entry " + tag);
                if (!(m.n > 0.0))
                    violations.push_back(tag + ": n must be positive");
                if (!(m.sigma_db >= 0.0))
                    violations.push_back(tag + ": sigma_db must be non-negative");
                out.pathloss_[key] = std::move(m);
            }
        }
        seen.clear();
        if (j.contains("asa")) {
            for (const auto& e : j.at("asa")) {
                AsaEntry a{parse_environment(e.at("environment").get<std::string>()),
                           parse_condition(e.at("condition").get<std::string>()),
                           e.at("mean_sa_deg").get<double>(),
                           e.at("std_sa_deg").get<double>(),
                           e.value("source", std::string("override"))};
                const auto key = index(a.environment, a.condition);
                const std::string tag =
                    std::string(to_string(a.environment)) + "/" + std::string(to_string(a.condition));
                if (!seen.insert(key).second)
                    violations.push_back("duplicate ASA entry " + tag);
                if (!(a.std_sa_deg >= 0.0))
                    violations.push_back(tag + ": std_sa_deg must be non-negative");
                out.asa_[key] = std::move(a);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("registry override: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("registry override: ") + e.what());
    }
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return out;
}

ModelRegistry ModelRegistry::with_overrides_file(const std::filesystem::path& path) const {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return with_overrides_json(ss.str());
}

std::string ModelRegistry::to_json() const {
    nlohmann::ordered_json j;
    auto& pl = j["pathloss"] = nlohmann::ordered_json::array();
    for (const auto& e : pathloss_) {
        nlohmann::ordered_json o;
        o["environment"] = to_string(e.environment);
        o["condition"] = to_string(e.condition);
        o["category"] = to_string(e.category);
        o["n"] = e.n;
        o["sigma_db"] = e.sigma_db;
        o["source"] = e.source;
        pl.push_back(std::move(o));
    }
    auto& as = j["asa"] = nlohmann::ordered_json::array();
    for (const auto& e : asa_) {
        nlohmann::ordered_json o;
        o["environment"] = to_string(e.environment);
        o["condition"] = to_string(e.condition);
        o["mean_sa_deg"] = e.mean_sa_deg;
        o["std_sa_deg"] = e.std_sa_deg;
        o["source"] = e.source;
        as.push_back(std::move(o));
    }
    return j.dump(2) + "\n";
}

} // namespace subthz
