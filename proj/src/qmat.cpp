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

#include "cohere/qmat.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cohere {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": matrix must be square and non-empty, got " << m.rows()
       << "x" << m.cols();
    throw ValidationError(os.str());
  }
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver did not converge while validating a state");
  }
  return solver.eigenvalues().minCoeff();
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  require_square(mat_, "UnitaryMatrix");
  const ComplexMatrix gram = mat_.adjoint() * mat_;
  const ComplexMatrix eye = ComplexMatrix::Identity(mat_.rows(), mat_.cols());
  const double dev = max_abs(gram - eye);
  if (dev > kValidationTol) {
    std::ostringstream os;
    os << "UnitaryMatrix invariant violated: ||U^dag U - 1||_max = " << dev
       << " exceeds " << kValidationTol;
    throw ValidationError(os.str());
  }
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw ValidationError("Spectrum invariant violated: empty eigenvalue list");
  }
  double sum = 0.0;
  for (double& v : values_) {
    if (v < -kNumericTol) {
      std::ostringstream os;
      os << "Spectrum invariant violated: eigenvalue " << v << " below -1e-9";
      throw ValidationError(os.str());
    }
    // Sub-1e-14 values are solver noise; keeping them would inflate any
    // downstream sqrt to the 1e-8 scale.
    if (v < 1e-14) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNumericTol) {
    std::ostringstream os;
    os << "Spectrum invariant violated: eigenvalue sum " << sum
       << " not 1 within 1e-9";
    throw ValidationError(os.str());
  }
  for (double& v : values_) v /= sum;
  std::sort(values_.begin(), values_.end(), std::greater<double>());
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  require_square(mat_, "DensityMatrix");
  const double herm_dev = max_abs(mat_ - mat_.adjoint());
  if (herm_dev > kValidationTol) {
    std::ostringstream os;
    os << "DensityMatrix invariant violated: not Hermitian, "
       << "||rho - rho^dag||_max = " << herm_dev;
    throw ValidationError(os.str());
  }
  const double trace_dev = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_dev > kValidationTol) {
    std::ostringstream os;
    os << "DensityMatrix invariant violated: trace deviates from 1 by "
       << trace_dev;
    throw ValidationError(os.str());
  }
  const double min_eig = min_eigenvalue((mat_ + mat_.adjoint()) * 0.5);
  if (min_eig < -kValidationTol) {
    std::ostringstream os;
    os << "DensityMatrix invariant violated: not positive semidefinite, "
       << "min eigenvalue = " << min_eig;
    throw ValidationError(os.str());
  }
}

EighResult eigh(const ComplexMatrix& hermitian) {
  require_square(hermitian, "eigh");
  const double herm_dev = max_abs(hermitian - hermitian.adjoint());
  if (herm_dev > 1e-8) {
    std::ostringstream os;
    os << "eigh precondition violated: input not Hermitian, "
       << "||H - H^dag||_max = " << herm_dev;
    throw ValidationError(os.str());
  }
  const ComplexMatrix sym = (hermitian + hermitian.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigh: eigensolver did not converge");
  }

  const int n = static_cast<int>(hermitian.rows());
  RealVector evals(n);
  ComplexMatrix evecs(n, n);
  // Eigen returns ascending order; flip to descending.
  for (int i = 0; i < n; ++i) {
    evals(i) = solver.eigenvalues()(n - 1 - i);
    evecs.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  // Phase convention: first nonzero component real positive.
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      const Complex v = evecs(r, i);
      if (std::abs(v) > 1e-12) {
        evecs.col(i) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return EighResult{std::move(evals), UnitaryMatrix(std::move(evecs))};
}

ComplexMatrix matrix_sqrt(const DensityMatrix& rho) {
  EighResult eg = eigh(rho.mat());
  const int n = rho.dim();
  RealVector roots(n);
  for (int i = 0; i < n; ++i) {
    double l = eg.eigenvalues(i);
    if (l < -1e-8) {
      std::ostringstream os;
      os << "matrix_sqrt: invalid state, eigenvalue " << l << " below -1e-8";
      throw ValidationError(os.str());
    }
    // Zero out eigensolver noise so the root does not amplify it to sqrt(eps).
    if (l < 1e-14) l = 0.0;
    roots(i) = std::sqrt(l);
  }
  const ComplexMatrix& v = eg.eigenvectors.mat();
  return v * roots.asDiagonal() * v.adjoint();
}

double purity(const DensityMatrix& rho) {
  // Tr rho^2 = ||rho||_F^2 for Hermitian rho.
  return rho.mat().squaredNorm();
}

double von_neumann_entropy(const DensityMatrix& rho, double base) {
  if (!(base > 1.0)) {
    throw ValidationError("von_neumann_entropy: log base must be > 1");
  }
  const Spectrum spec = state_spectrum(rho);
  double s = 0.0;
  for (double l : spec.values()) {
    if (l > 0.0) s -= l * std::log(l);
  }
  return s / std::log(base);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "fidelity: dimension mismatch, " << rho.dim() << " vs "
       << sigma.dim();
    throw ValidationError(os.str());
  }
  const ComplexMatrix root = matrix_sqrt(sigma);
  ComplexMatrix inner = root * rho.mat() * root;
  inner = (inner + inner.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(inner,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("fidelity: eigensolver did not converge");
  }
  double f = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    const double l = solver.eigenvalues()(i);
    if (l > 1e-14) f += std::sqrt(l);
  }
  return f;
}

ComplexMatrix partial_trace_raw(const ComplexMatrix& joint, int dim_a,
                                int dim_b, Keep keep) {
  require_square(joint, "partial_trace");
  if (dim_a < 1 || dim_b < 1 ||
      static_cast<long>(dim_a) * dim_b != joint.rows()) {
    std::ostringstream os;
    os << "partial_trace: dims (" << dim_a << ", " << dim_b
       << ") do not factor joint dimension " << joint.rows();
    throw ValidationError(os.str());
  }
  if (keep == Keep::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int a = 0; a < dim_a; ++a) {
      for (int a2 = 0; a2 < dim_a; ++a2) {
        Complex acc(0.0, 0.0);
        for (int b = 0; b < dim_b; ++b) {
          acc += joint(a * dim_b + b, a2 * dim_b + b);
        }
        out(a, a2) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int b = 0; b < dim_b; ++b) {
    for (int b2 = 0; b2 < dim_b; ++b2) {
      Complex acc(0.0, 0.0);
      for (int a = 0; a < dim_a; ++a) {
        acc += joint(a * dim_b + b, a * dim_b + b2);
      }
      out(b, b2) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& joint, int dim_a, int dim_b,
                            Keep keep) {
  return DensityMatrix(partial_trace_raw(joint.mat(), dim_a, dim_b, keep));
}

UnitaryMatrix dft_unitary(int n) {
  if (n < 1) {
    throw ValidationError("dft_unitary: dimension must be >= 1");
  }
  ComplexMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // jk mod n keeps the phase argument small for large n.
      const double phase =
          2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / n;
      f(j, k) = scale * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return UnitaryMatrix(std::move(f));
}

Spectrum state_spectrum(const DensityMatrix& rho) {
  EighResult eg = eigh(rho.mat());
  std::vector<double> values(eg.eigenvalues.data(),
                             eg.eigenvalues.data() + rho.dim());
  return Spectrum(std::move(values));
}

DensityMatrix maximally_mixed(int n) {
  if (n < 1) {
    throw ValidationError("maximally_mixed: dimension must be >= 1");
  }
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

}  // namespace cohere
