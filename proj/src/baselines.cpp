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

#include "risdas/baselines.hpp"

#include <stdexcept>
#include <string>

#include "risdas/errors.hpp"
#include "risdas/rng.hpp"

namespace risdas {

BaselineResult exhaustive_search(const ChannelRealization& ch, std::size_t limit) {
  ch.validate();
  const std::size_t n = ch.size();
  if (n > limit || n >= 63)
    throw PlanError("exhaustive search refused: N = " + std::to_string(n) +
                    " exceeds the exhaustive limit of " + std::to_string(limit));

  std::vector<cplx> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = std::conj(ch.h_r[i]) * ch.g[i];
  const cplx hd = std::conj(ch.h_d);

  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t best_code = 0;
  double best = -1.0;
  for (std::uint64_t code = 0; code < total; ++code) {
    cplx acc = hd;
    for (std::size_t i = 0; i < n; ++i) acc += ((code >> i) & 1U) ? -phi[i] : phi[i];
    const double p = std::norm(acc);
    if (p > best) {
      best = p;
      best_code = code;
    }
  }

  SignVec w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = ((best_code >> i) & 1U) ? -1 : 1;
  BaselineResult r;
  r.config = PhaseConfig(std::move(w));
  r.power = received_power(ch, r.config);
  r.evaluations = total;
  return r;
}

BaselineResult greedy_bitflip(const ChannelRealization& ch, const PhaseConfig& start,
                              std::size_t max_sweeps) {
  ch.validate();
  const std::size_t n = ch.size();
  if (start.size() != n)
    throw std::invalid_argument("greedy_bitflip: start has " + std::to_string(start.size()) +
                                " elements, channel has " + std::to_string(n));

  std::vector<cplx> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = std::conj(ch.h_r[i]) * ch.g[i];

  BaselineResult r;
  r.config = start;
  const double start_power = received_power(ch, start);
  r.evaluations = 1;

  cplx acc = std::conj(ch.h_d);
  for (std::size_t i = 0; i < n; ++i) acc += static_cast<double>(start[i]) * phi[i];
  double cur = std::norm(acc);

  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx trial = acc - 2.0 * static_cast<double>(r.config[i]) * phi[i];
      const double p = std::norm(trial);
      ++r.evaluations;
      if (p > cur) {
        acc = trial;
        cur = p;
        r.config.flip(i);
        changed = true;
      }
    }
    r.sweep_powers.push_back(received_power(ch, r.config));
    if (!changed) break;
  }

  r.power = received_power(ch, r.config);
  // Running sums can drift by an ulp; never hand back something worse than the start.
  if (r.power < start_power) {
    r.config = start;
    r.power = start_power;
  }
  return r;
}

BaselineResult random_best_of_k(const ChannelRealization& ch, std::size_t k, std::uint64_t seed) {
  ch.validate();
  if (k == 0) throw std::invalid_argument("random_best_of_k: k must be at least 1");
  const std::size_t n = ch.size();
  Rng rng(seed);

  BaselineResult r;
  r.power = -1.0;
  SignVec w(n);
  for (std::size_t t = 0; t < k; ++t) {
    for (auto& s : w) s = rng.coin() ? -1 : 1;
    PhaseConfig cfg(w);
    const double p = received_power(ch, cfg);
    ++r.evaluations;
    if (p > r.power) {
      r.power = p;
      r.config = std::move(cfg);
    }
  }
  return r;
}

double continuous_upper_bound(const ChannelRealization& ch) {
  ch.validate();
  double s = std::abs(ch.h_d);
  for (std::size_t i = 0; i < ch.size(); ++i) s += std::abs(std::conj(ch.h_r[i]) * ch.g[i]);
  return s * s * ch.tx_power;
}

}  // namespace risdas
