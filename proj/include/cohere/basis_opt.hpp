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

#include <functional>
#include <vector>

namespace cohere {

/// Knobs for the multi-restart ascent over the unitary group. Defaults
/// converge on n <= 4 problems within seconds.
struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 2000;
  double step_init = 0.1;
  double tol = 1e-10;       // objective stall threshold
  double fd_step = 1e-6;    // finite-difference step on the chart
  SeededStream stream{1};

  void validate() const;
};

struct OptimizationResult {
  double value = 0.0;
  UnitaryMatrix unitary;
  int iterations = 0;     // total across restarts
  bool converged = false; // whether the winning restart stalled below tol
};

enum class BasisObjective { kL1, kL1Distance };

/// U = exp(i H(theta)) on the n^2-parameter Hermitian chart: n diagonal reals
/// followed by (re, im) pairs for the upper-triangle entries in row order.
/// theta.size() must be a perfect square.
UnitaryMatrix unitary_from_params(const std::vector<double>& theta);

/// Inverse chart for a Hermitian matrix.
std::vector<double> params_from_hermitian(const ComplexMatrix& hermitian);

/// Hermitian logarithm of a unitary, H with U = exp(i H), via Schur form.
ComplexMatrix hermitian_log(const UnitaryMatrix& u);

/// Multi-restart finite-difference ascent of an arbitrary objective of the
/// rotated state U rho U^dag. One restart starts from the uniformizing
/// unitary, the rest from Haar-unitary logarithms drawn from cfg.stream.
/// The objective trace within each restart is monotone non-decreasing.
OptimizationResult maximize_unitary_objective(
    const DensityMatrix& rho,
    const std::function<double(const ComplexMatrix& rotated)>& objective,
    const OptimizerConfig& cfg);

/// Maximization of one of the two l1 objectives: the off-diagonal absolute
/// sum (kL1) or the elementwise absolute distance to 1/n (kL1Distance).
OptimizationResult maximize_over_basis(const DensityMatrix& rho,
                                       BasisObjective objective,
                                       const OptimizerConfig& cfg);

/// Basis-optimized l1 coherence max_U sum_{i != j} |(U rho U^dag)_ij|.
double c1(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// Gap statistics of sampled + optimized searches against the closed forms
/// for the l2 and relative-entropy objectives. Throws ValidationError with
/// the witness unitary if a search ever exceeds a closed form.
struct ClosedFormValidation {
  double closed_l2 = 0.0;
  double best_l2 = 0.0;         // best over samples, optimizer and uniformizer
  double uniformizer_l2 = 0.0;  // value attained by the constructive unitary
  double closed_re = 0.0;
  double best_re = 0.0;
  double uniformizer_re = 0.0;
  int samples = 0;
};

ClosedFormValidation validate_closed_forms(const DensityMatrix& rho,
                                           int n_samples,
                                           const OptimizerConfig& cfg,
                                           double base = 2.0);

/// measure_report plus the optimized c1 field.
MeasureReport measure_report_with_c1(const DensityMatrix& rho, double base,
                                     const OptimizerConfig& cfg);

}  // namespace cohere
