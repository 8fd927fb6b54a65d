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

#ifndef SUBTHZ_ERROR_HPP
#define SUBTHZ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subthz {

// Malformed input file (syntax, missing columns, wrong JSON types).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input parsed but violates one or more data invariants. Every violation is
// kept so callers can report all of them at once.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = std::to_string(v.size()) + " validation error(s)";
        for (const auto& s : v)
            out += "\n  " + s;
        return out;
    }

    std::vector<std::string> violations_;
};

// Numerical failure on otherwise valid input (degenerate fit, empty result).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace subthz

#endif
