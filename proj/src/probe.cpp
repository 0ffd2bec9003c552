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

#include "cohere/probe.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace cohere {

namespace {

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

Complex system_overlap(const DensityMatrix& rho_s, const UnitaryMatrix& u) {
  return (rho_s.mat() * u.mat()).trace();
}

}  // namespace

BlochVector::BlochVector(double x, double y, double z) : p1(x), p2(y), p3(z) {
  const double r = norm();
  if (r > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "BlochVector invariant violated: |P| = " << r << " exceeds 1";
    throw ValidationError(os.str());
  }
}

double BlochVector::norm() const {
  return std::sqrt(p1 * p1 + p2 * p2 + p3 * p3);
}

DensityMatrix probe_state(const BlochVector& p) {
  ComplexMatrix rho(2, 2);
  rho(0, 0) = Complex(0.5 * (1.0 + p.p3), 0.0);
  rho(1, 1) = Complex(0.5 * (1.0 - p.p3), 0.0);
  rho(0, 1) = Complex(0.5 * p.p1, -0.5 * p.p2);
  rho(1, 0) = Complex(0.5 * p.p1, 0.5 * p.p2);
  return DensityMatrix(std::move(rho));
}

ProbeCircuitResult run_probe_circuit(const BlochVector& p,
                                     const DensityMatrix& rho_s,
                                     const UnitaryMatrix& u) {
  if (rho_s.dim() != u.dim()) {
    std::ostringstream os;
    os << "run_probe_circuit: system dim " << rho_s.dim()
       << " does not match unitary dim " << u.dim();
    throw ValidationError(os.str());
  }
  std::vector<std::string> warnings;
  if (p.p2 == 0.0 && p.p3 == 0.0) {
    warnings.push_back(
        "P2 and P3 both vanish: the probe carries no off-diagonal signal");
  }
  const int n = rho_s.dim();
  if (max_abs(u.mat() - ComplexMatrix::Identity(n, n)) <= 1e-12) {
    warnings.push_back("U is the identity: the scheme probes nothing");
  }

  // Closed form: diagonal (1 +- P1)/2, off-diagonal (P3 + i P2) tr / 2.
  const Complex tr_u_dag = (rho_s.mat() * u.mat().adjoint()).trace();
  ComplexMatrix closed(2, 2);
  closed(0, 0) = Complex(0.5 * (1.0 + p.p1), 0.0);
  closed(1, 1) = Complex(0.5 * (1.0 - p.p1), 0.0);
  closed(0, 1) = 0.5 * Complex(p.p3, p.p2) * tr_u_dag;
  closed(1, 0) = std::conj(closed(0, 1));

  // Full circuit: Hadamard on the probe, then the block-controlled U.
  const ComplexMatrix h = hadamard();
  const ComplexMatrix probe_in = h * probe_state(p).mat() * h;
  ComplexMatrix joint = kron(probe_in, rho_s.mat());
  ComplexMatrix evolved(2 * n, 2 * n);
  evolved.topLeftCorner(n, n) = joint.topLeftCorner(n, n);
  evolved.topRightCorner(n, n) = joint.topRightCorner(n, n) * u.mat().adjoint();
  evolved.bottomLeftCorner(n, n) = u.mat() * joint.bottomLeftCorner(n, n);
  evolved.bottomRightCorner(n, n) =
      u.mat() * joint.bottomRightCorner(n, n) * u.mat().adjoint();
  const ComplexMatrix reduced = partial_trace_raw(evolved, 2, n, Keep::A);

  return ProbeCircuitResult{DensityMatrix(std::move(closed)),
                            DensityMatrix(reduced), std::move(warnings)};
}

double delta_c(const BlochVector& p, const DensityMatrix& rho_s,
               const UnitaryMatrix& u) {
  if (rho_s.dim() != u.dim()) {
    throw ValidationError("delta_c: system and unitary dimensions differ");
  }
  const double overlap_sq = std::norm(system_overlap(rho_s, u));
  // |Tr rho_s U| <= 1 for any state and unitary; this guards the sign of the
  // coherence change.
  if (overlap_sq > 1.0 + kNumericTol) {
    std::ostringstream os;
    os << "delta_c: |Tr rho_s U|^2 = " << overlap_sq
       << " exceeds 1, inputs are not a valid state/unitary pair";
    throw NumericalError(os.str());
  }
  return 0.5 * (p.p2 * p.p2 + p.p3 * p.p3) * (1.0 - overlap_sq);
}

double probe_cost(const ProbeScheme& scheme) {
  double cost = 0.0;
  for (const UnitaryMatrix& u : scheme.unitaries) {
    cost += delta_c(scheme.bloch, scheme.system, u);
  }
  return cost;
}

Dqc1Result dqc1_delta(const UnitaryMatrix& u, double p3) {
  const int dim = u.dim();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    std::ostringstream os;
    os << "dqc1_delta: dimension " << dim << " is not a power of two";
    throw ValidationError(os.str());
  }
  if (std::abs(p3) > 1.0 + 1e-12) {
    throw ValidationError("dqc1_delta: |P3| must be <= 1");
  }
  Dqc1Result result;
  result.normalized_trace = u.mat().trace() / static_cast<double>(dim);
  result.delta_c =
      0.5 * p3 * p3 * (1.0 - std::norm(result.normalized_trace));
  return result;
}

QomResult qom_overlap(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) {
    std::ostringstream os;
    os << "qom_overlap: dimension mismatch, " << rho1.dim() << " vs "
       << rho2.dim();
    throw ValidationError(os.str());
  }
  QomResult result;
  result.overlap = (rho1.mat() * rho2.mat()).trace().real();
  result.delta_c = 0.5 * (1.0 - result.overlap * result.overlap);
  return result;
}

}  // namespace cohere
