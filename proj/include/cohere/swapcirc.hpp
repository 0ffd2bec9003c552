// Copyright 2026 The totalcoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "cohere/measures.hpp"
#include "cohere/sampling.hpp"

#include <cstdint>
#include <vector>

namespace cohere {

// Joint-space cap for the circuit simulation (k state copies of dimension d).
inline constexpr long kSwapDimCap = 1 << 10;

/// Power sums p_k = Tr rho^k of an n-dimensional state, k = 1..count.
/// Validated: p_1 = 1 within 1e-9, 1/n^(k-1) <= p_k <= 1 and p_{k+1} <= p_k
/// within the same slack.
class MomentVector {
 public:
  MomentVector(int dim, std::vector<double> moments);

  int dim() const { return dim_; }
  const std::vector<double>& moments() const { return moments_; }
  int count() const { return static_cast<int>(moments_.size()); }

 private:
  int dim_;
  std::vector<double> moments_;
};

/// Finite-shot record of one probe measurement run.
struct ShotRecord {
  long long shots = 0;
  long long plus_count = 0;

  double estimate() const {
    return 2.0 * static_cast<double>(plus_count) / static_cast<double>(shots) -
           1.0;
  }
};

/// Cyclic shift of k tensor factors of dimension d:
/// V |psi_1, ..., psi_k> = |psi_k, psi_1, ..., psi_{k-1}>, so that
/// Tr(V rho^(x k)) = Tr rho^k. V_1 is the identity.
UnitaryMatrix generalized_swap(int copies, int d);

/// Block matrix diag(1_m, U): the probe qubit (most significant factor)
/// controls U.
UnitaryMatrix controlled_unitary(const UnitaryMatrix& u);

/// Exact simulation of the probe circuit: prepare |+><+| (x) rho^(x k), apply
/// the controlled cyclic shift, reduce to the probe and measure sigma_x.
/// Returns the +1 outcome probability, which equals (1 + Tr rho^k) / 2.
double swap_test_probability(const DensityMatrix& rho, int copies);

/// p_k for k = 1..k_max from repeated circuit runs. k_max <= dim(rho).
MomentVector moments_from_circuit(const DensityMatrix& rho, int k_max);

/// Binomial finite-shot emulation of the sigma_x statistics.
ShotRecord sample_swap_test(const DensityMatrix& rho, int copies,
                            long long shots, SeededStream& stream);

/// Newton's identities turn the n power sums into elementary symmetric
/// polynomials; the eigenvalues are the roots of the resulting monic
/// polynomial, extracted from its companion matrix. Roots with
/// |imag| > 1e-6 or real part < -1e-6 signal inconsistent moments (shot noise
/// too large or invalid input). Supported for n <= 8; the inversion amplifies
/// moment errors rapidly with n, so noisy recovery above n = 4 is unreliable.
Spectrum spectrum_from_moments(const MomentVector& moments);

/// Full measure report from measured moments alone. c2 and purity use the
/// two-copy shortcut p_2 directly; the spectral route must agree within 1e-9.
MeasureReport measures_from_moments(const MomentVector& moments,
                                    double base = 2.0);

}  // namespace cohere
