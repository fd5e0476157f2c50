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

// Divide-and-sort optimizer for 1-bit RIS phase configuration.
//
// The received power |w_bar^T phi_bar|^2 over w_bar = [w; 1] in {+1,-1}^(N+1)
// is a rank-one binary quadratic form. Writing |w_bar^T z| as the maximum over
// an auxiliary phase psi of Re{w_bar^T z e^{-j psi}} makes each entry's optimal
// sign sgn(cos(psi - angle(z_n))). Folding every angle into [-pi/2, pi/2)
// (recording a sign flip for the folded entries) and sorting the folded
// angles, the sign pattern as psi sweeps a half turn is a step function over
// the sorted order. Only N+1 steps exist, and one of them is optimal.
//
// All indices are 0-based. Position N (the last one) is the homogenizing
// entry carrying conj(h_d).

#include <cstddef>
#include <span>
#include <vector>

#include "risdas/model.hpp"

namespace risdas {

struct FoldResult {
  /// Folded angles, each in [-pi/2, pi/2).
  std::vector<double> folded_angles;
  /// True where the canonical angle lies in [pi/2, 3pi/2).
  std::vector<bool> flip_mask;
  std::vector<double> magnitudes;

  std::size_t size() const { return folded_angles.size(); }
};

struct SortPermutation {
  /// forward[k]: original index at sorted position k.
  std::vector<std::size_t> forward;
  /// inverse[n]: sorted position of original index n.
  std::vector<std::size_t> inverse;
};

/// The N+1 candidate sign vectors, stored column-major: columns[k] has
/// +1 at the first k+1 sorted positions and -1 elsewhere, mapped back to
/// original order and with folded entries negated.
struct CandidateSet {
  std::vector<SignVec> columns;

  std::size_t size() const { return columns.size(); }
};

struct CandidateChoice {
  std::size_t index = 0;
  SignVec w_bar;
  double amplitude = 0.0;
};

struct DasSolution {
  PhaseConfig config;
  /// Optimal homogeneous vector, last entry normalized to +1.
  SignVec w_bar;
  /// |w_bar^T z|.
  double objective_amplitude = 0.0;
  /// Received power with tx_power applied.
  double power = 0.0;
};

/// Canonical angle in [-pi/2, 3pi/2): principal argument, shifted by +2pi when
/// below -pi/2.
double canonical_angle(cplx v);

FoldResult fold_angles(std::span<const cplx> z);

/// Stable ascending sort of the folded angles; ties keep original index order.
SortPermutation sort_folded(const FoldResult& fr);

/// Materializes all N+1 candidates (O(N^2) memory). das_solve does not call
/// this; it is the reference route for tests and inspection.
CandidateSet build_candidates(const FoldResult& fr, const SortPermutation& perm);

/// argmax over candidates of |c^T z|; ties go to the lowest candidate index.
CandidateChoice select_best(const CandidateSet& cands, std::span<const cplx> z);

/// Same choice as select_best(build_candidates(...), z) in O(N) using running
/// sums over the sorted order instead of materializing the candidates.
CandidateChoice best_step_candidate(const FoldResult& fr, const SortPermutation& perm,
                                    std::span<const cplx> z);

/// Negates w_bar_raw when its last entry is -1 and splits off the
/// configuration. Returns (w, normalized w_bar).
std::pair<PhaseConfig, SignVec> recover_config(std::span<const std::int8_t> w_bar_raw);

/// Globally optimal 1-bit configuration in O(N log N).
DasSolution das_solve(const ChannelRealization& ch);

/// Solver on a precomputed homogeneous vector; `tx_power` scales the reported power.
DasSolution das_solve(const CompositePhi& cp, double tx_power = 1.0);

}  // namespace risdas
