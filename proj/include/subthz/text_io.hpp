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

// Small text helpers shared by the CSV readers and writers.

#ifndef SUBTHZ_TEXT_IO_HPP
#define SUBTHZ_TEXT_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace subthz {

std::string_view trim(std::string_view s) noexcept;

// Splits on commas; no quoting support.
std::vector<std::string> split_csv_line(std::string_view line);

// Full-string parse; throws ParseError naming `what` on failure.
double parse_double(std::string_view s, const std::string& what);

// Shortest representation that round-trips.
std::string format_double(double v);

// Fixed-point with the given number of decimals.
std::string format_fixed(double v, int decimals);

// Writes `text` to `path`, replacing it. Throws std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace subthz

#endif
