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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "risdas/baselines.hpp"
#include "risdas/model.hpp"

namespace risdas {

enum class Method { das, exhaustive, greedy, random };

std::string_view to_string(Method m);
/// Throws InputError on an unknown name.
Method parse_method(std::string_view name);

struct ExperimentPlan {
  std::vector<std::size_t> n_values;
  std::size_t trials = 1000;
  std::uint64_t base_seed = 0;
  std::vector<Method> methods{Method::das};
  ChannelParams channel_params{};
  std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
  /// Draws for the random baseline; its winner is also greedy's start.
  std::size_t random_k = 16;
  std::size_t greedy_max_sweeps = 1000;

  /// InputError for an empty/zero sweep or zero trials; PlanError when
  /// exhaustive search is requested beyond exhaustive_limit.
  void validate() const;
};

/// Seed of the channel used by trial `trial` at size `n`.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, std::size_t trial);

struct TrialRecord {
  std::size_t n = 0;
  std::size_t trial = 0;
  Method method = Method::das;
  double power = 0.0;
  double snr_db = 0.0;
  double wall_time = 0.0;  // seconds, solver only
};

struct AggregateRow {
  std::size_t n = 0;
  Method method = Method::das;
  double mean_snr_db = 0.0;
  double mean_power = 0.0;
  double total_time = 0.0;
  /// Fraction of trials within 1e-9 relative of the exhaustive optimum;
  /// empty when exhaustive search did not run at this n.
  std::optional<double> optimality_rate;
  std::size_t trials = 0;
};

struct TimingRow {
  std::size_t n = 0;
  double total_time = 0.0;
};

/// Runs every (n, trial, method) triple. Records come back ordered by n (plan
/// order), then trial, then method (plan order). All methods of a trial see
/// the same channel. Greedy starts from the random baseline's winner, so its
/// wall time includes that draw.
std::vector<TrialRecord> run_plan(const ExperimentPlan& plan);

/// Groups by (n, method) in first-appearance order.
std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records);

/// Solver-only DaS time over `plan.trials` channels per n, after one untimed
/// warm-up solve. With repeats > 1 the smallest total is kept.
std::vector<TimingRow> timing_scaling(const ExperimentPlan& plan, std::size_t repeats = 1);

inline constexpr const char* kTrialsHeader = "n,trial,method,power,snr_db,wall_time_s";
inline constexpr const char* kAggregateHeader =
    "n,method,mean_snr_db,mean_power,total_time_s,optimality_rate";

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

/// Parsers for the two formats above; InputError on malformed content.
std::vector<TrialRecord> read_trials_csv(std::istream& in);
std::vector<AggregateRow> read_aggregate_csv(std::istream& in);

}  // namespace risdas
