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

#ifndef SUBTHZ_TYPES_HPP
#define SUBTHZ_TYPES_HPP

#include <array>
#include <string>
#include <string_view>

namespace subthz {

enum class Environment { indoor, outdoor };
enum class Condition { los, nlos };

// Path-loss modeling category. The k-th strongest categories are limited to
// k = 2 and k = 3.
enum class Category { directional, omnidirectional, second_strongest, third_strongest };

inline constexpr std::array<Environment, 2> all_environments{Environment::indoor, Environment::outdoor};
inline constexpr std::array<Condition, 2> all_conditions{Condition::los, Condition::nlos};
inline constexpr std::array<Category, 4> all_categories{Category::directional, Category::omnidirectional,
                                                       Category::second_strongest, Category::third_strongest};

std::string_view to_string(Environment e) noexcept;
std::string_view to_string(Condition c) noexcept;
std::string_view to_string(Category c) noexcept;

// Case-insensitive parsers; throw std::invalid_argument on unknown names.
// Category accepts "directional", "omni"/"omnidirectional",
// "second_strongest", "third_strongest", "kth2", "kth3".
Environment parse_environment(std::string_view s);
Condition parse_condition(std::string_view s);
Category parse_category(std::string_view s);

// Maps k in {2, 3} to the matching category; any other k throws
// std::invalid_argument.
Category kth_strongest(int k);

// Rank of the MPC a category reads (1 for directional, 0 for omni).
int mpc_rank(Category c) noexcept;

} // namespace subthz

#endif
