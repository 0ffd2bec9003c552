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

#include <string>
#include <vector>

namespace cohere {

/// Real 3-vector P with |P| <= 1 parameterizing the probe qubit
/// rho_p = (1 + P . sigma) / 2.
struct BlochVector {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  BlochVector(double x, double y, double z);
  double norm() const;
};

/// One probing scheme: probe Bloch vector, probed system state, and the
/// ordered controlled unitaries applied to it.
struct ProbeScheme {
  BlochVector bloch;
  DensityMatrix system;
  std::vector<UnitaryMatrix> unitaries;
};

/// rho_p = (1 + P . sigma) / 2; purity (1 + |P|^2) / 2.
DensityMatrix probe_state(const BlochVector& p);

struct ProbeCircuitResult {
  DensityMatrix closed;     // reduced probe state from the closed form
  DensityMatrix simulated;  // reduced probe state from the full circuit
  std::vector<std::string> warnings;
};

/// Final probe state after Hadamard + controlled-U, both as the closed form
/// (diagonal (1 +- P1)/2, off-diagonal (P3 + i P2) Tr(rho_s U^dag) / 2) and
/// as the full joint simulation reduced to the probe. Emits warnings (not
/// errors) for the degenerate configurations P2 = P3 = 0 and U = 1.
ProbeCircuitResult run_probe_circuit(const BlochVector& p,
                                     const DensityMatrix& rho_s,
                                     const UnitaryMatrix& u);

/// Coherence change of the probe qubit:
/// (P2^2 + P3^2) / 2 * (1 - |Tr rho_s U|^2), always >= 0.
double delta_c(const BlochVector& p, const DensityMatrix& rho_s,
               const UnitaryMatrix& u);

/// Scheme cost: sum of delta_c over the scheme's unitaries.
double probe_cost(const ProbeScheme& scheme);

struct Dqc1Result {
  Complex normalized_trace;  // Tr U / 2^n
  double delta_c = 0.0;      // (P3^2 / 2) (1 - |Tr U / 2^n|^2)
};

/// DQC1 specialization: system is maximally mixed on n qubits, probe along z.
/// U's dimension must be a power of two.
Dqc1Result dqc1_delta(const UnitaryMatrix& u, double p3);

struct QomResult {
  double overlap = 0.0;  // Tr rho1 rho2
  double delta_c = 0.0;  // (1 - overlap^2) / 2
};

/// Overlap-measurement specialization: P = (0, 0, 1), system rho1 (x) rho2,
/// controlled unitary the two-copy swap.
QomResult qom_overlap(const DensityMatrix& rho1, const DensityMatrix& rho2);

}  // namespace cohere
