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

#include "cohere/measures.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cohere {

namespace {

void require_same_dim(const DensityMatrix& rho, const UnitaryMatrix& u,
                      const char* what) {
  if (rho.dim() != u.dim()) {
    std::ostringstream os;
    os << what << ": dimension mismatch, state " << rho.dim() << " vs unitary "
       << u.dim();
    throw ValidationError(os.str());
  }
}

double shannon_entropy(const RealVector& p, double base) {
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) s -= p(i) * std::log(p(i));
  }
  return s / std::log(base);
}

}  // namespace

double c2(const DensityMatrix& rho) {
  return purity(rho) - 1.0 / rho.dim();
}

double c_re(const DensityMatrix& rho, double base) {
  return std::log(static_cast<double>(rho.dim())) / std::log(base) -
         von_neumann_entropy(rho, base);
}

double c_skew(const DensityMatrix& rho) {
  const Spectrum spec = state_spectrum(rho);
  double root_sum = 0.0;
  for (double l : spec.values()) root_sum += std::sqrt(l);
  return 1.0 - root_sum * root_sum / rho.dim();
}

double c_trace(const DensityMatrix& rho) {
  const Spectrum spec = state_spectrum(rho);
  const double uniform = 1.0 / rho.dim();
  double sum = 0.0;
  for (double l : spec.values()) sum += std::abs(l - uniform);
  return sum;
}

double c2_via_distance(const DensityMatrix& rho) {
  const int n = rho.dim();
  const ComplexMatrix diff =
      rho.mat() - ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  return diff.squaredNorm();
}

double c_re_via_distance(const DensityMatrix& rho, double base) {
  return relative_entropy(rho, maximally_mixed(rho.dim()), base);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double base) {
  if (rho.dim() != sigma.dim()) {
    throw ValidationError("relative_entropy: dimension mismatch");
  }
  if (!(base > 1.0)) {
    throw ValidationError("relative_entropy: log base must be > 1");
  }
  const EighResult eg = eigh(sigma.mat());
  double cross = 0.0;  // Tr rho log sigma, natural log
  for (int i = 0; i < sigma.dim(); ++i) {
    const ComplexVector v = eg.eigenvectors.mat().col(i);
    const double weight = std::max(0.0, (v.adjoint() * rho.mat() * v)(0).real());
    const double l = eg.eigenvalues(i);
    if (l <= 1e-15) {
      if (weight > 1e-12) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log(l);
  }
  return -von_neumann_entropy(rho, base) - cross / std::log(base);
}

double basis_coherence_l2(const DensityMatrix& rho, const UnitaryMatrix& u) {
  require_same_dim(rho, u, "basis_coherence_l2");
  const ComplexMatrix rotated = u.mat() * rho.mat() * u.mat().adjoint();
  double diag_sq = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    diag_sq += std::norm(rotated(i, i));
  }
  return purity(rho) - diag_sq;
}

double basis_coherence_re(const DensityMatrix& rho, const UnitaryMatrix& u,
                          double base) {
  require_same_dim(rho, u, "basis_coherence_re");
  const ComplexMatrix rotated = u.mat() * rho.mat() * u.mat().adjoint();
  RealVector diag(rho.dim());
  for (int i = 0; i < rho.dim(); ++i) {
    diag(i) = std::max(0.0, rotated(i, i).real());
  }
  // S(rho || dephased rotated state) = S(diag) - S(rho).
  return shannon_entropy(diag, base) - von_neumann_entropy(rho, base);
}

double basis_coherence_l1(const DensityMatrix& rho, const UnitaryMatrix& u) {
  require_same_dim(rho, u, "basis_coherence_l1");
  const ComplexMatrix rotated = u.mat() * rho.mat() * u.mat().adjoint();
  double sum = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    for (int j = 0; j < rho.dim(); ++j) {
      if (i != j) sum += std::abs(rotated(i, j));
    }
  }
  return sum;
}

UnitaryMatrix uniformizing_unitary(const DensityMatrix& rho) {
  const EighResult eg = eigh(rho.mat());
  const UnitaryMatrix f = dft_unitary(rho.dim());
  return UnitaryMatrix(f.mat() * eg.eigenvectors.mat().adjoint());
}

MeasureReport measure_report(const DensityMatrix& rho, double base) {
  MeasureReport report;
  report.dim = rho.dim();
  report.purity = purity(rho);
  report.c2 = report.purity - 1.0 / rho.dim();
  report.c_re = c_re(rho, base);
  report.c_skew = c_skew(rho);
  report.c_trace = c_trace(rho);
  report.log_base = base;
  return report;
}

MeasureReport report_from_spectrum(const Spectrum& spectrum, int dim,
                                   double base) {
  if (spectrum.size() != dim) {
    throw ValidationError("report_from_spectrum: spectrum size must equal dim");
  }
  if (!(base > 1.0)) {
    throw ValidationError("report_from_spectrum: log base must be > 1");
  }
  MeasureReport report;
  report.dim = dim;
  report.log_base = base;
  const double uniform = 1.0 / dim;
  double p2 = 0.0, root_sum = 0.0, entropy = 0.0, trace_dist = 0.0;
  for (double l : spectrum.values()) {
    p2 += l * l;
    root_sum += std::sqrt(l);
    if (l > 0.0) entropy -= l * std::log(l);
    trace_dist += std::abs(l - uniform);
  }
  report.purity = p2;
  report.c2 = p2 - uniform;
  report.c_re = (std::log(static_cast<double>(dim)) - entropy) / std::log(base);
  report.c_skew = 1.0 - root_sum * root_sum / dim;
  report.c_trace = trace_dist;
  return report;
}

}  // namespace cohere
