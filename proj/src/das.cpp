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

#include "risdas/das.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risdas {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

double canonical_angle(cplx v) {
  const double r = std::arg(v);
  return r < -kHalfPi ? r + 2.0 * std::numbers::pi : r;
}

FoldResult fold_angles(std::span<const cplx> z) {
  FoldResult fr;
  fr.folded_angles.resize(z.size());
  fr.flip_mask.resize(z.size());
  fr.magnitudes.resize(z.size());

  for (std::size_t n = 0; n < z.size(); ++n) {
    const cplx v = z[n];
    fr.magnitudes[n] = std::abs(v);
    if (v == cplx{0.0, 0.0}) {
      fr.folded_angles[n] = 0.0;
      fr.flip_mask[n] = false;
      continue;
    }
    // Work from the principal argument in (-pi, pi] so the folded value is a
    // single rounding away from it.
    const double r = std::arg(v);
    double folded = r;
    bool flip = false;
    if (r >= kHalfPi) {
      folded = r - std::numbers::pi;
      flip = true;
    } else if (r < -kHalfPi) {
      folded = r + std::numbers::pi;
      flip = true;
    }
    if (folded >= kHalfPi) folded = std::nextafter(kHalfPi, 0.0);
    fr.folded_angles[n] = folded;
    fr.flip_mask[n] = flip;
  }
  return fr;
}

SortPermutation sort_folded(const FoldResult& fr) {
  const std::size_t n = fr.size();
  // (angle, index) keys: lexicographic order is the stable order by angle.
  std::vector<std::pair<double, std::size_t>> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = {fr.folded_angles[i], i};
  std::sort(keys.begin(), keys.end());

  SortPermutation perm;
  perm.forward.resize(n);
  perm.inverse.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    perm.forward[k] = keys[k].second;
    perm.inverse[keys[k].second] = k;
  }
  return perm;
}

CandidateSet build_candidates(const FoldResult& fr, const SortPermutation& perm) {
  const std::size_t n = fr.size();
  if (perm.inverse.size() != n || perm.forward.size() != n)
    throw std::invalid_argument("build_candidates: permutation length mismatch");

  CandidateSet cs;
  cs.columns.assign(n, SignVec(n));
  for (std::size_t k = 0; k < n; ++k) {
    auto& col = cs.columns[k];
    for (std::size_t i = 0; i < n; ++i) {
      const int step = perm.inverse[i] <= k ? 1 : -1;
      col[i] = static_cast<std::int8_t>(fr.flip_mask[i] ? -step : step);
    }
  }
  return cs;
}

CandidateChoice select_best(const CandidateSet& cands, std::span<const cplx> z) {
  if (cands.columns.empty()) throw std::invalid_argument("select_best: empty candidate set");
  CandidateChoice best;
  best.amplitude = -1.0;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const double a = signed_sum_modulus(cands.columns[k], z);
    if (a > best.amplitude) {
      best.amplitude = a;
      best.index = k;
    }
  }
  best.w_bar = cands.columns[best.index];
  return best;
}

CandidateChoice best_step_candidate(const FoldResult& fr, const SortPermutation& perm,
                                    std::span<const cplx> z) {
  const std::size_t n = fr.size();
  if (z.size() != n || perm.forward.size() != n)
    throw std::invalid_argument("best_step_candidate: length mismatch");
  if (n == 0) throw std::invalid_argument("best_step_candidate: empty input");

  // Entries in sorted order with the fold undone, so that candidate k sums
  // +y over sorted positions 0..k and -y over the rest.
  std::vector<cplx> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = perm.forward[k];
    y[k] = fr.flip_mask[i] ? -z[i] : z[i];
  }
  // suffix[k] = sum of y[k+1..n-1]
  std::vector<cplx> suffix(n, cplx{0.0, 0.0});
  for (std::size_t k = n - 1; k > 0; --k) suffix[k - 1] = suffix[k] + y[k];

  std::size_t best_k = 0;
  double best_val = -1.0;
  cplx prefix{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    prefix += y[k];
    const double v = std::abs(prefix - suffix[k]);
    if (v > best_val) {
      best_val = v;
      best_k = k;
    }
  }

  CandidateChoice out;
  out.index = best_k;
  out.w_bar.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int step = perm.inverse[i] <= best_k ? 1 : -1;
    out.w_bar[i] = static_cast<std::int8_t>(fr.flip_mask[i] ? -step : step);
  }
  out.amplitude = signed_sum_modulus(out.w_bar, z);
  return out;
}

std::pair<PhaseConfig, SignVec> recover_config(std::span<const std::int8_t> w_bar_raw) {
  if (w_bar_raw.size() < 2)
    throw std::invalid_argument("recover_config: need at least 2 entries");
  for (auto s : w_bar_raw)
    if (s != 1 && s != -1) throw std::invalid_argument("recover_config: entries must be +1 or -1");
  SignVec w_bar(w_bar_raw.begin(), w_bar_raw.end());
  if (w_bar.back() == -1)
    for (auto& s : w_bar) s = static_cast<std::int8_t>(-s);
  PhaseConfig cfg(SignVec(w_bar.begin(), w_bar.end() - 1));
  return {std::move(cfg), std::move(w_bar)};
}

DasSolution das_solve(const CompositePhi& cp, double tx_power) {
  if (cp.z.size() != cp.phi.size() + 1)
    throw std::invalid_argument("das_solve: inconsistent composite vector");
  const FoldResult fr = fold_angles(cp.z);
  const SortPermutation perm = sort_folded(fr);
  CandidateChoice choice = best_step_candidate(fr, perm, cp.z);
  auto [cfg, w_bar] = recover_config(choice.w_bar);

  DasSolution sol;
  sol.objective_amplitude = choice.amplitude;
  sol.power = homogeneous_power(cp, cfg) * tx_power;
  sol.config = std::move(cfg);
  sol.w_bar = std::move(w_bar);
  return sol;
}

DasSolution das_solve(const ChannelRealization& ch) {
  const CompositePhi cp = composite_phi(ch);
  DasSolution sol = das_solve(cp, ch.tx_power);
  // Report through the same evaluation path the baselines use.
  sol.power = received_power(ch, sol.config);
  return sol;
}

}  // namespace risdas
