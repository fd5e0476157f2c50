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

#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "risdas/baselines.hpp"
#include "risdas/das.hpp"
#include "risdas/errors.hpp"
#include "risdas/rng.hpp"

using namespace risdas;
using namespace std::complex_literals;

namespace {

ChannelRealization channel_from_phi(CVec phi, cplx h_d) {
  ChannelRealization ch;
  ch.g = std::move(phi);
  ch.h_r.assign(ch.g.size(), 1.0);
  ch.h_d = h_d;
  return ch;
}

}  // namespace

TEST_CASE("exhaustive_search") {
  SUBCASE("single aligned element") {
    const auto r = exhaustive_search(channel_from_phi({1.0}, 1.0));
    CHECK(r.config.to_string() == "+");
    CHECK(r.power == doctest::Approx(4.0));
    CHECK(r.evaluations == 2);
  }
  SUBCASE("sign alignment without direct link; ties keep the lowest code") {
    const auto r = exhaustive_search(channel_from_phi({1.0, -1.0}, 0.0));
    CHECK(r.power == doctest::Approx(4.0));
    // Code 0b01 (w = [-1, +1]) precedes 0b10 (w = [+1, -1]).
    CHECK(r.config.to_string() == "-+");
  }
  SUBCASE("N = 10 seed 3 agrees with das") {
    const auto ch = generate_channel(10, 3);
    const auto r = exhaustive_search(ch);
    CHECK(r.evaluations == 1024);
    CHECK(oracle::rel_close(r.power, das_solve(ch).power));
    CHECK(r.power == received_power(ch, r.config));
  }
  SUBCASE("evaluation count is 2^N") {
    for (std::size_t n = 1; n <= 12; ++n) CHECK(exhaustive_search(generate_channel(n, n)).evaluations == (1ULL << n));
  }
  SUBCASE("refuses beyond the limit") {
    const auto ch = generate_channel(6, 1);
    try {
      exhaustive_search(ch, 5);
      FAIL("expected PlanError");
    } catch (const PlanError& e) {
      CHECK(std::string(e.what()).find("limit of 5") != std::string::npos);
    }
    CHECK_NOTHROW(exhaustive_search(ch, 6));
  }
}

TEST_CASE("greedy_bitflip") {
  SUBCASE("global optimum is a fixed point") {
    const auto ch = generate_channel(30, 4);
    const auto opt = das_solve(ch);
    const auto r = greedy_bitflip(ch, opt.config);
    CHECK(r.config == opt.config);
    CHECK(r.power == opt.power);
    CHECK(r.sweep_powers.size() == 1);
  }
  SUBCASE("real positive channel climbs to all plus") {
    const auto ch = channel_from_phi({1.0, 2.0, 0.5}, 4.0);
    const auto r = greedy_bitflip(ch, PhaseConfig::uniform(3, -1));
    CHECK(r.config.to_string() == "+++");
    CHECK(r.power == doctest::Approx(56.25));
  }
  SUBCASE("mirrored start is a local optimum when the elements outweigh the direct link") {
    const auto ch = channel_from_phi({1.0, 2.0, 0.5, 3.0}, 1.0);
    const auto r = greedy_bitflip(ch, PhaseConfig::uniform(4, -1));
    CHECK(r.config.to_string() == "----");
    CHECK(r.power == doctest::Approx(30.25));
    CHECK(das_solve(ch).power == doctest::Approx(56.25));
  }
  SUBCASE("max_sweeps bounds the work") {
    const auto ch = generate_channel(50, 8);
    const auto r = greedy_bitflip(ch, PhaseConfig::uniform(50, 1), 1);
    CHECK(r.sweep_powers.size() == 1);
    CHECK(r.evaluations == 51);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(greedy_bitflip(generate_channel(3, 1), PhaseConfig::uniform(2)), std::invalid_argument);
  }
  SUBCASE("never beats das, monotone sweeps, sometimes strictly worse") {
    std::size_t strict = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto ch = generate_channel(12, seed);
      const auto start = random_best_of_k(ch, 1, seed);
      const auto r = greedy_bitflip(ch, start.config);
      const double opt = das_solve(ch).power;
      CHECK(r.power >= start.power);
      CHECK(r.power <= opt);
      if (r.power < opt * (1.0 - 1e-9)) ++strict;
      for (std::size_t i = 1; i < r.sweep_powers.size(); ++i)
        CHECK(r.sweep_powers[i] >= r.sweep_powers[i - 1]);
    }
    CHECK(strict > 0);
  }
}

TEST_CASE("random_best_of_k") {
  const auto ch = generate_channel(8, 2);
  const auto a = random_best_of_k(ch, 1, 77);
  const auto b = random_best_of_k(ch, 1, 77);
  CHECK(a.config == b.config);
  CHECK(a.power == b.power);
  CHECK(a.evaluations == 1);
  CHECK(random_best_of_k(ch, 64, 77).power >= a.power);
  CHECK(random_best_of_k(ch, 64, 77).power <= das_solve(ch).power);
  CHECK_THROWS_AS(random_best_of_k(ch, 0, 1), std::invalid_argument);

  // With N = 2 and 64 draws all four patterns appear for practically every
  // seed; check that on the seeds where they do, the exhaustive power is hit.
  std::size_t covered = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto c2 = generate_channel(2, seed);
    Rng rng(seed);
    bool seen[4] = {false, false, false, false};
    for (int t = 0; t < 64; ++t) {
      const int b0 = rng.coin() ? 1 : 0;
      const int b1 = rng.coin() ? 1 : 0;
      seen[b0 | (b1 << 1)] = true;
    }
    if (seen[0] && seen[1] && seen[2] && seen[3]) {
      ++covered;
      CHECK(random_best_of_k(c2, 64, seed).power == exhaustive_search(c2).power);
    }
  }
  CHECK(covered > 190);
}

TEST_CASE("continuous_upper_bound") {
  const auto tight = channel_from_phi({1.0, 1.0}, 1.0);
  CHECK(continuous_upper_bound(tight) == doctest::Approx(9.0));
  CHECK(das_solve(tight).power == doctest::Approx(9.0));

  const auto quad = channel_from_phi({1i}, 1.0);
  CHECK(continuous_upper_bound(quad) == doctest::Approx(4.0));
  CHECK(das_solve(quad).power == doctest::Approx(2.0));

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto ch = generate_channel(1 + seed % 50, seed);
    CHECK(continuous_upper_bound(ch) >= das_solve(ch).power);
  }
}
