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

#ifndef SUBTHZ_REGISTRY_HPP
#define SUBTHZ_REGISTRY_HPP

#include "subthz/types.hpp"

#include <array>
#include <filesystem>
#include <span>
#include <string>

namespace subthz {

struct ModelEntry {
    Environment environment = Environment::indoor;
    Condition condition = Condition::los;
    Category category = Category::directional;
    double n = 0.0;
    double sigma_db = 0.0;
    std::string source;
};

struct AsaEntry {
    Environment environment = Environment::indoor;
    Condition condition = Condition::los;
    double mean_sa_deg = 0.0;
    double std_sa_deg = 0.0;
    std::string source;
};

// Published CI parameters (n, sigma) for every environment, condition and
// category, plus ASA statistics per environment and condition. Values are
// stored exactly as printed in the source tables. Lookups are total over the
// enum domain.
class ModelRegistry {
public:
    static constexpr std::size_t pathloss_size = 16;
    static constexpr std::size_t asa_size = 4;

    // The compiled-in tables.
    static const ModelRegistry& builtin();

    const ModelEntry& lookup(Environment env, Condition cond, Category cat) const noexcept;
    const AsaEntry& lookup_asa(Environment env, Condition cond) const noexcept;

    // Deterministic order: environment, then condition, then category.
    std::span<const ModelEntry> pathloss_entries() const noexcept { return pathloss_; }
    std::span<const AsaEntry> asa_entries() const noexcept { return asa_; }

    // Replaces matching entries with those in `json_text`, which follows the
    // export schema; either array may be absent. Throws ParseError on
    // malformed input and ValidationError on out-of-domain values or
    // duplicate keys.
    ModelRegistry with_overrides_json(const std::string& json_text) const;
    ModelRegistry with_overrides_file(const std::filesystem::path& path) const;

    // {"pathloss": [...], "asa": [...]} with source strings.
    std::string to_json() const;

private:
    static std::size_t index(Environment env, Condition cond, Category cat) noexcept;
    static std::size_t index(Environment env, Condition cond) noexcept;

    std::array<ModelEntry, pathloss_size> pathloss_{};
    std::array<AsaEntry, asa_size> asa_{};
};

} // namespace subthz

#endif
