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

#ifndef SUBTHZ_SERIES_HPP
#define SUBTHZ_SERIES_HPP

#include "subthz/types.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace subthz {

// Path loss versus distance for one modeling category. Column i of the two
// vectors belongs to link_ids[i]; points are ordered by link id.
struct PathLossSeries {
    Category category = Category::directional;
    Eigen::VectorXd distance_m;
    Eigen::VectorXd pathloss_db;
    std::vector<std::string> link_ids;

    Eigen::Index size() const noexcept { return distance_m.size(); }
    bool empty() const noexcept { return distance_m.size() == 0; }
};

} // namespace subthz

#endif
