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

#include "subthz/types.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace subthz {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

} // namespace

std::string_view to_string(Environment e) noexcept {
    return e == Environment::indoor ? "indoor" : "outdoor";
}

std::string_view to_string(Condition c) noexcept {
    return c == Condition::los ? "LoS" : "NLoS";
}

std::string_view to_string(Category c) noexcept {
    switch (c) {
    case Category::directional: return "directional";
    case Category::omnidirectional: return "omnidirectional";
    case Category::second_strongest: return "second_strongest";
    case Category::third_strongest: return "third_strongest";
    }
    return "?";
}

Environment parse_environment(std::string_view s) {
    const auto v = lower(s);
    if (v == "indoor")
        return Environment::indoor;
    if (v == "outdoor")
        return Environment::outdoor;
    throw std::invalid_argument("unknown environment '" + std::string(s) + "' (expected indoor|outdoor)");
}

Condition parse_condition(std::string_view s) {
    const auto v = lower(s);
    if (v == "los")
        return Condition::los;
    if (v == "nlos")
        return Condition::nlos;
    throw std::invalid_argument("unknown condition '" + std::string(s) + "' (expected LoS|NLoS)");
}

Category parse_category(std::string_view s) {
    const auto v = lower(s);
    if (v == "directional")
        return Category::directional;
    if (v == "omni" || v == "omnidirectional")
        return Category::omnidirectional;
    if (v == "second_strongest" || v == "kth2")
        return Category::second_strongest;
    if (v == "third_strongest" || v == "kth3")
        return Category::third_strongest;
    throw std::invalid_argument("unknown category '" + std::string(s) + "'");
}

Category kth_strongest(int k) {
    if (k == 2)
        return Category::second_strongest;
    if (k == 3)
        return Category::third_strongest;
    throw std::invalid_argument("k-th strongest category requires k in {2, 3}, got " + std::to_string(k));
}

int mpc_rank(Category c) noexcept {
    switch (c) {
    case Category::directional: return 1;
    case Category::second_strongest: return 2;
    case Category::third_strongest: return 3;
    case Category::omnidirectional: break;
    }
    return 0;
}

} // namespace subthz
