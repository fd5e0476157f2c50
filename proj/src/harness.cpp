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

#include "risdas/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "risdas/csv.hpp"
#include "risdas/das.hpp"
#include "risdas/errors.hpp"
#include "risdas/rng.hpp"

namespace risdas {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr std::uint64_t kRandomStream = 0x52414e44;  // "RAND"

bool matches_oracle(double p, double oracle) {
  return std::abs(p - oracle) <= 1e-9 * std::max(std::abs(oracle), 1e-300);
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::das: return "das";
    case Method::exhaustive: return "exhaustive";
    case Method::greedy: return "greedy";
    case Method::random: return "random";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::das, Method::exhaustive, Method::greedy, Method::random})
    if (to_string(m) == name) return m;
  throw InputError("unknown method '" + std::string(name) +
                   "' (expected das, exhaustive, greedy or random)");
}

void ExperimentPlan::validate() const {
  if (n_values.empty()) throw InputError("plan has no RIS sizes");
  for (auto n : n_values)
    if (n == 0) throw InputError("RIS size must be at least 1");
  if (trials == 0) throw InputError("trials must be at least 1");
  if (methods.empty()) throw InputError("plan has no methods");
  if (random_k == 0) throw InputError("random_k must be at least 1");
  if (std::find(methods.begin(), methods.end(), Method::exhaustive) != methods.end()) {
    const auto max_n = *std::max_element(n_values.begin(), n_values.end());
    if (max_n > exhaustive_limit)
      throw PlanError("exhaustive search requested for N = " + std::to_string(max_n) +
                      " but the exhaustive limit is " + std::to_string(exhaustive_limit));
  }
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, std::size_t trial) {
  return mix_seed(base_seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
}

std::vector<TrialRecord> run_plan(const ExperimentPlan& plan) {
  plan.validate();

  std::vector<Method> methods;
  for (Method m : plan.methods)
    if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);

  std::vector<TrialRecord> out;
  out.reserve(plan.n_values.size() * plan.trials * methods.size());

  for (std::size_t n : plan.n_values) {
    for (std::size_t t = 0; t < plan.trials; ++t) {
      const std::uint64_t seed = trial_seed(plan.base_seed, n, t);
      const ChannelRealization ch = generate_channel(n, seed, plan.channel_params);
      const std::uint64_t rand_seed = mix_seed(seed, kRandomStream);

      for (Method m : methods) {
        TrialRecord rec;
        rec.n = n;
        rec.trial = t;
        rec.method = m;
        const auto t0 = Clock::now();
        switch (m) {
          case Method::das:
            rec.power = das_solve(ch).power;
            break;
          case Method::exhaustive:
            rec.power = exhaustive_search(ch, plan.exhaustive_limit).power;
            break;
          case Method::greedy: {
            const auto start = random_best_of_k(ch, plan.random_k, rand_seed);
            rec.power = greedy_bitflip(ch, start.config, plan.greedy_max_sweeps).power;
            break;
          }
          case Method::random:
            rec.power = random_best_of_k(ch, plan.random_k, rand_seed).power;
            break;
        }
        rec.wall_time = seconds_since(t0);
        rec.snr_db = snr_db(rec.power, ch.noise_power);
        out.push_back(rec);
      }
    }
  }
  return out;
}

std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records) {
  std::map<std::pair<std::size_t, std::size_t>, double> oracle;  // (n, trial) -> power
  for (const auto& r : records)
    if (r.method == Method::exhaustive) oracle[{r.n, r.trial}] = r.power;

  struct Acc {
    AggregateRow row;
    double snr_sum = 0.0;
    double power_sum = 0.0;
    std::size_t checked = 0;
    std::size_t matched = 0;
  };
  std::vector<Acc> groups;
  std::map<std::pair<std::size_t, Method>, std::size_t> slot;

  for (const auto& r : records) {
    auto [it, inserted] = slot.try_emplace({r.n, r.method}, groups.size());
    if (inserted) {
      groups.emplace_back();
      groups.back().row.n = r.n;
      groups.back().row.method = r.method;
    }
    Acc& a = groups[it->second];
    a.snr_sum += r.snr_db;
    a.power_sum += r.power;
    a.row.total_time += r.wall_time;
    ++a.row.trials;
    if (auto o = oracle.find({r.n, r.trial}); o != oracle.end()) {
      ++a.checked;
      if (matches_oracle(r.power, o->second)) ++a.matched;
    }
  }

  std::vector<AggregateRow> rows;
  rows.reserve(groups.size());
  for (auto& a : groups) {
    const double cnt = static_cast<double>(a.row.trials);
    a.row.mean_snr_db = a.snr_sum / cnt;
    a.row.mean_power = a.power_sum / cnt;
    if (a.checked > 0)
      a.row.optimality_rate = static_cast<double>(a.matched) / static_cast<double>(a.checked);
    rows.push_back(a.row);
  }
  return rows;
}

std::vector<TimingRow> timing_scaling(const ExperimentPlan& plan, std::size_t repeats) {
  plan.validate();
  if (plan.methods.size() != 1 || plan.methods.front() != Method::das)
    throw PlanError("timing_scaling measures the das method only");
  if (repeats == 0) repeats = 1;

  std::vector<TimingRow> rows;
  volatile double sink = 0.0;
  for (std::size_t n : plan.n_values) {
    std::vector<ChannelRealization> channels;
    channels.reserve(plan.trials);
    for (std::size_t t = 0; t < plan.trials; ++t)
      channels.push_back(generate_channel(n, trial_seed(plan.base_seed, n, t), plan.channel_params));

    sink = sink + das_solve(channels.front()).power;  // warm-up

    double best = -1.0;
    for (std::size_t r = 0; r < repeats; ++r) {
      const auto t0 = Clock::now();
      double acc = 0.0;
      for (const auto& ch : channels) acc += das_solve(ch).power;
      const double elapsed = seconds_since(t0);
      sink = sink + acc;
      if (best < 0.0 || elapsed < best) best = elapsed;
    }
    rows.push_back({n, best});
  }
  return rows;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  using csv::format_double;
  out << kTrialsHeader << '\n';
  for (const auto& r : records)
    out << r.n << ',' << r.trial << ',' << to_string(r.method) << ',' << format_double(r.power) << ','
        << format_double(r.snr_db) << ',' << format_double(r.wall_time) << '\n';
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  using csv::format_double;
  out << kAggregateHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << to_string(r.method) << ',' << format_double(r.mean_snr_db) << ','
        << format_double(r.mean_power) << ',' << format_double(r.total_time) << ',';
    if (r.optimality_rate) out << format_double(*r.optimality_rate);
    out << '\n';
  }
}

namespace {

std::vector<std::vector<std::string>> read_table(std::istream& in, std::string_view header,
                                                 std::size_t width) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw InputError("missing header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw InputError("expected header '" + std::string(header) + "'", line_no);

  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    auto f = csv::split(line);
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != width)
      throw InputError("expected " + std::to_string(width) + " fields, found " + std::to_string(f.size()),
                       line_no);
    rows.emplace_back(f.begin(), f.end());
    rows.back().push_back(std::to_string(line_no));
  }
  return rows;
}

std::size_t need_size(const std::string& s, std::size_t line) {
  auto v = csv::parse_int(s);
  if (!v || *v < 0) throw InputError("expected a non-negative integer, found '" + s + "'", line);
  return static_cast<std::size_t>(*v);
}

double need_double(const std::string& s, std::size_t line) {
  auto v = csv::parse_double(s);
  if (!v) throw InputError("expected a number, found '" + s + "'", line);
  return *v;
}

}  // namespace

std::vector<TrialRecord> read_trials_csv(std::istream& in) {
  std::vector<TrialRecord> out;
  for (const auto& f : read_table(in, kTrialsHeader, 6)) {
    const std::size_t line = std::stoul(f[6]);
    TrialRecord r;
    r.n = need_size(f[0], line);
    r.trial = need_size(f[1], line);
    r.method = parse_method(f[2]);
    r.power = need_double(f[3], line);
    r.snr_db = need_double(f[4], line);
    r.wall_time = need_double(f[5], line);
    out.push_back(r);
  }
  return out;
}

std::vector<AggregateRow> read_aggregate_csv(std::istream& in) {
  std::vector<AggregateRow> out;
  for (const auto& f : read_table(in, kAggregateHeader, 6)) {
    const std::size_t line = std::stoul(f[6]);
    AggregateRow r;
    r.n = need_size(f[0], line);
    r.method = parse_method(f[1]);
    r.mean_snr_db = need_double(f[2], line);
    r.mean_power = need_double(f[3], line);
    r.total_time = need_double(f[4], line);
    if (!f[5].empty()) r.optimality_rate = need_double(f[5], line);
    out.push_back(r);
  }
  return out;
}

}  // namespace risdas
