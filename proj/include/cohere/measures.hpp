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

#include "cohere/qmat.hpp"

#include <optional>

namespace cohere {

/// Closed-form basis-independent coherence values of one state. c1 is filled
/// only when the unitary-group optimizer was invoked. Entropic quantities are
/// in units of log_base.
struct MeasureReport {
  int dim = 0;
  double purity = 0.0;
  double c2 = 0.0;
  double c_re = 0.0;
  double c_skew = 0.0;
  double c_trace = 0.0;
  std::optional<double> c1;
  double log_base = 2.0;
};

/// l2 (squared Frobenius) total coherence: Tr rho^2 - 1/n. In [0, 1 - 1/n].
double c2(const DensityMatrix& rho);

/// Relative-entropy total coherence: log_base n - S(rho). In [0, log_base n].
double c_re(const DensityMatrix& rho, double base = 2.0);

/// Skew-information total coherence: 1 - (sum_i sqrt(l_i))^2 / n.
double c_skew(const DensityMatrix& rho);

/// Trace-norm distance to the maximally mixed state: sum_i |l_i - 1/n|.
double c_trace(const DensityMatrix& rho);

/// Distance-framework routes; they must agree with the closed forms above.
double c2_via_distance(const DensityMatrix& rho);  // ||rho - 1/n||_F^2
double c_re_via_distance(const DensityMatrix& rho, double base = 2.0);

/// S(rho || sigma) in units of log_base. sigma must have full rank wherever
/// rho has support, otherwise the result is +infinity.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double base = 2.0);

/// Coherence of rho evaluated in the fixed basis that U rotates to
/// (no optimization): l2, relative-entropy and l1 variants.
double basis_coherence_l2(const DensityMatrix& rho, const UnitaryMatrix& u);
double basis_coherence_re(const DensityMatrix& rho, const UnitaryMatrix& u,
                          double base = 2.0);
double basis_coherence_l1(const DensityMatrix& rho, const UnitaryMatrix& u);

/// Constructive optimizer for the l2 and relative-entropy measures:
/// U = F V^dag with V diagonalizing rho and F the DFT unitary. Every diagonal
/// entry of U rho U^dag equals 1/n within 1e-10.
UnitaryMatrix uniformizing_unitary(const DensityMatrix& rho);

/// All closed-form measures of one state. c1 stays empty; fill it through the
/// basis-opt layer when the optimized l1 value is wanted.
MeasureReport measure_report(const DensityMatrix& rho, double base = 2.0);

/// Same report evaluated from a spectrum alone (all closed-form measures are
/// spectral functions). purity is sum l_i^2 unless the caller overrides it.
MeasureReport report_from_spectrum(const Spectrum& spectrum, int dim,
                                   double base = 2.0);

}  // namespace cohere
