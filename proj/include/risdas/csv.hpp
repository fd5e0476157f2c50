// Copyright 2026 The risdas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace risdas::csv {

/// Shortest-form decimal with at most 17 significant digits; round-trips
/// exactly and ignores the global locale.
std::string format_double(double v);

/// Parses a whole field as a double (accepts inf/nan). nullopt on junk.
std::optional<double> parse_double(std::string_view s);

std::optional<long long> parse_int(std::string_view s);

/// Splits on ',' without quoting support; surrounding whitespace and a
/// trailing '\r' are trimmed from each field.
std::vector<std::string_view> split(std::string_view line);

}  // namespace risdas::csv
