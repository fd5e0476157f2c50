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

#include <filesystem>
#include <iosfwd>

#include "risdas/model.hpp"

namespace risdas {

inline constexpr const char* kChannelHeader = "idx,g_re,g_im,hr_re,hr_im";

/// Channel CSV:
///
///   idx,g_re,g_im,hr_re,hr_im
///   0,<g_re>,<g_im>,<hr_re>,<hr_im>
///   ...
///   hd,<re>,<im>,<noise_power>,<tx_power>
///
/// Element rows are indexed from 0 and must appear in order. Throws
/// InputError with a 1-based line number on malformed content.
ChannelRealization read_channel(std::istream& in);
void write_channel(std::ostream& out, const ChannelRealization& ch);

/// File variants; IoError when the file cannot be opened or written.
ChannelRealization read_channel_file(const std::filesystem::path& path);
void write_channel_file(const std::filesystem::path& path, const ChannelRealization& ch);

}  // namespace risdas
