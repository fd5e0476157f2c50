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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "risdas/model.hpp"

namespace risdas {

inline constexpr std::size_t kDefaultExhaustiveLimit = 20;

struct BaselineResult {
  PhaseConfig config;
  /// received_power(ch, config)
  double power = 0.0;
  std::uint64_t evaluations = 0;
  /// Power after each completed sweep (greedy_bitflip only).
  std::vector<double> sweep_powers;
};

/// Brute force over all 2^N configurations. Configuration `code` sets
/// w_n = -1 where bit n of `code` is 1; ties keep the lowest code.
/// Throws PlanError when N > limit.
BaselineResult exhaustive_search(const ChannelRealization& ch,
                                 std::size_t limit = kDefaultExhaustiveLimit);

/// Coordinate ascent: sweeps elements in order, flipping any bit that strictly
/// increases power, until a sweep makes no change or max_sweeps is reached.
BaselineResult greedy_bitflip(const ChannelRealization& ch, const PhaseConfig& start,
                              std::size_t max_sweeps = 1000);

/// Best of k uniformly drawn configurations; first draw wins ties.
BaselineResult random_best_of_k(const ChannelRealization& ch, std::size_t k, std::uint64_t seed);

/// (sum |phi_n| + |h_d|)^2 * tx_power: every term co-phased, which no
/// sign pattern can beat.
double continuous_upper_bound(const ChannelRealization& ch);

}  // namespace risdas
