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

#include "risdas/model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "risdas/rng.hpp"

namespace risdas {

void ChannelRealization::validate() const {
  if (g.empty()) throw std::invalid_argument("channel has no RIS elements");
  if (g.size() != h_r.size())
    throw std::invalid_argument("channel length mismatch: g has " + std::to_string(g.size()) +
                                " entries, h_r has " + std::to_string(h_r.size()));
  if (!(noise_power > 0.0)) throw std::invalid_argument("noise_power must be positive");
  if (!(tx_power > 0.0)) throw std::invalid_argument("tx_power must be positive");
}

PhaseConfig::PhaseConfig(SignVec signs) : signs_(std::move(signs)) {
  for (auto s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("phase config entries must be +1 or -1");
}

PhaseConfig PhaseConfig::uniform(std::size_t n, std::int8_t sign) {
  return PhaseConfig(SignVec(n, sign));
}

PhaseConfig PhaseConfig::from_string(std::string_view s) {
  SignVec v;
  v.reserve(s.size());
  for (char c : s) {
    if (c == '+')
      v.push_back(1);
    else if (c == '-')
      v.push_back(-1);
    else
      throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
  }
  return PhaseConfig(std::move(v));
}

PhaseConfig PhaseConfig::negated() const {
  PhaseConfig out = *this;
  for (auto& s : out.signs_) s = static_cast<std::int8_t>(-s);
  return out;
}

std::string PhaseConfig::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (auto s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

std::vector<double> PhaseConfig::phases() const {
  std::vector<double> out;
  out.reserve(signs_.size());
  for (auto s : signs_) out.push_back(s > 0 ? 0.0 : std::numbers::pi);
  return out;
}

CompositePhi composite_phi(const ChannelRealization& ch) {
  ch.validate();
  const std::size_t n = ch.size();
  CompositePhi cp;
  cp.phi.resize(n);
  for (std::size_t i = 0; i < n; ++i) cp.phi[i] = std::conj(ch.h_r[i]) * ch.g[i];
  cp.h_d_conj = std::conj(ch.h_d);

  cp.phi_bar = cp.phi;
  cp.phi_bar.push_back(cp.h_d_conj);

  double sq = 0.0;
  for (const auto& v : cp.phi_bar) sq += std::norm(v);
  cp.lambda = sq;

  cp.z.assign(n + 1, cplx{0.0, 0.0});
  if (sq > 0.0) {
    const double inv = 1.0 / std::sqrt(sq);
    for (std::size_t i = 0; i <= n; ++i) cp.z[i] = cp.phi_bar[i] * inv;
  } else {
    cp.z[0] = 1.0;
  }
  return cp;
}

double received_power(const ChannelRealization& ch, const PhaseConfig& cfg) {
  if (cfg.size() != ch.g.size() || ch.h_r.size() != ch.g.size())
    throw std::invalid_argument("received_power: config has " + std::to_string(cfg.size()) +
                                " elements, channel has " + std::to_string(ch.g.size()));
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < cfg.size(); ++i)
    acc += std::conj(ch.h_r[i]) * static_cast<double>(cfg[i]) * ch.g[i];
  acc += std::conj(ch.h_d);
  return std::norm(acc) * ch.tx_power;
}

double homogeneous_power(const CompositePhi& cp, const PhaseConfig& cfg) {
  if (cfg.size() != cp.size())
    throw std::invalid_argument("homogeneous_power: dimension mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < cfg.size(); ++i) acc += static_cast<double>(cfg[i]) * cp.phi_bar[i];
  acc += cp.phi_bar.back();
  return std::norm(acc);
}

double signed_sum_modulus(std::span<const std::int8_t> c, std::span<const cplx> z) {
  if (c.size() != z.size()) throw std::invalid_argument("signed_sum_modulus: dimension mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < c.size(); ++i) acc += static_cast<double>(c[i]) * z[i];
  return std::abs(acc);
}

double snr_db(double power, double noise_power) {
  if (power <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(power / noise_power);
}

namespace {

cplx draw_cn(Rng& rng, double variance) {
  const auto [re, im] = rng.normal_pair();
  const double s = std::sqrt(variance / 2.0);
  return {s * re, s * im};
}

}  // namespace

ChannelRealization generate_channel(std::size_t n, std::uint64_t seed,
                                    const ChannelParams& params) {
  if (n == 0) throw std::invalid_argument("generate_channel: n must be at least 1");
  if (params.beta_g < 0.0 || params.beta_r < 0.0 || params.beta_d < 0.0)
    throw std::invalid_argument("generate_channel: variances must be non-negative");

  Rng rng(seed);
  ChannelRealization ch;
  ch.g.resize(n);
  ch.h_r.resize(n);
  for (auto& v : ch.g) v = draw_cn(rng, params.beta_g);
  for (auto& v : ch.h_r) v = draw_cn(rng, params.beta_r);
  // Drawn even without LoS so g and h_r do not depend on the flag.
  const cplx hd = draw_cn(rng, params.beta_d);
  ch.h_d = params.los ? hd : cplx{0.0, 0.0};
  ch.noise_power = params.noise_power;
  ch.tx_power = params.tx_power;
  ch.validate();
  return ch;
}

}  // namespace risdas
