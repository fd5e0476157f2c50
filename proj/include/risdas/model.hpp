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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace risdas {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Binary vector with entries in {+1, -1}.
using SignVec = std::vector<std::int8_t>;

/// One draw of the single-antenna BS -> RIS -> user propagation state.
///
/// `h_r` holds the physical RIS->user channel; the received-signal expression
/// applies its conjugate. `h_d` is exactly zero when the direct link is
/// blocked.
struct ChannelRealization {
  CVec g;
  CVec h_r;
  cplx h_d{0.0, 0.0};
  double noise_power = 1.0;
  double tx_power = 1.0;

  std::size_t size() const { return g.size(); }

  /// Throws std::invalid_argument when the invariants are violated
  /// (length mismatch, N = 0, non-positive powers).
  void validate() const;
};

/// A +/-1 reflection pattern. +1 is phase 0, -1 is phase pi.
class PhaseConfig {
 public:
  PhaseConfig() = default;
  explicit PhaseConfig(SignVec signs);

  /// All elements set to `sign`.
  static PhaseConfig uniform(std::size_t n, std::int8_t sign = 1);

  /// Parses a `+`/`-` string such as "+--+".
  static PhaseConfig from_string(std::string_view s);

  std::size_t size() const { return signs_.size(); }
  std::int8_t operator[](std::size_t i) const { return signs_[i]; }
  const SignVec& signs() const { return signs_; }
  void flip(std::size_t i) { signs_[i] = static_cast<std::int8_t>(-signs_[i]); }

  PhaseConfig negated() const;
  std::string to_string() const;
  /// theta_n in {0, pi}.
  std::vector<double> phases() const;

  friend bool operator==(const PhaseConfig&, const PhaseConfig&) = default;

 private:
  SignVec signs_;
};

/// Homogenized channel vector phi_bar = [phi; conj(h_d)] with
/// phi_n = conj(h_r[n]) * g[n]. The quadratic form's matrix is phi_bar phi_bar^H
/// and is never built; `lambda` is its only nonzero eigenvalue and `z` the
/// matching unit eigenvector.
struct CompositePhi {
  CVec phi;
  cplx h_d_conj{0.0, 0.0};
  CVec phi_bar;
  double lambda = 0.0;
  CVec z;

  std::size_t size() const { return phi.size(); }
};

struct ChannelParams {
  double beta_g = 1.0;
  double beta_r = 1.0;
  double beta_d = 1.0;
  bool los = true;
  double noise_power = 1.0;
  double tx_power = 1.0;
};

CompositePhi composite_phi(const ChannelRealization& ch);

/// |h_r^H diag(w) g + h_d^H|^2 * tx_power, evaluated element by element from
/// the raw channel. Throws std::invalid_argument on dimension mismatch.
double received_power(const ChannelRealization& ch, const PhaseConfig& cfg);

/// Same objective through the homogeneous form |w_bar^T phi_bar|^2 with
/// w_bar = [w; 1]. Does not apply tx_power.
double homogeneous_power(const CompositePhi& cp, const PhaseConfig& cfg);

/// |c^T z| for a real sign vector c and complex z of the same length.
double signed_sum_modulus(std::span<const std::int8_t> c, std::span<const cplx> z);

/// 10 log10(power / noise_power); zero power maps to -infinity.
double snr_db(double power, double noise_power);

/// i.i.d. circularly-symmetric complex Gaussian channel; per-entry variances
/// come from `params`. Identical (n, seed, params) give bit-identical draws.
/// Throws std::invalid_argument on n == 0.
ChannelRealization generate_channel(std::size_t n, std::uint64_t seed,
                                    const ChannelParams& params = {});

}  // namespace risdas
