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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohere {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Default tolerances: type invariants are validated at 1e-10, numerical
// equality assertions use 1e-9 unless an operation states otherwise.
inline constexpr double kValidationTol = 1e-10;
inline constexpr double kNumericTol = 1e-9;

/// Thrown when a domain-type invariant or an operation precondition fails.
/// The message names the violated invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on numerical failures: solver non-convergence, inconsistent inputs.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entrywise max modulus, the norm used by all invariant checks.
double max_abs(const ComplexMatrix& m);

/// n x n complex matrix with U^dag U = 1 within 1e-10.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix mat);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Descending eigenvalue list of a density matrix. Values in [-1e-9, 0) are
/// clamped to 0 and the list renormalized to sum exactly 1; larger negatives
/// and sums off by more than 1e-9 are rejected.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<size_t>(i)]; }

 private:
  std::vector<double> values_;
};

/// n x n complex state: Hermitian and unit trace within 1e-10, smallest
/// eigenvalue >= -1e-10. Immutable after construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

struct EighResult {
  RealVector eigenvalues;      // real, descending
  UnitaryMatrix eigenvectors;  // columns, phase-fixed (see eigh)
};

/// Hermitian eigendecomposition H = V diag(l) V^dag with descending
/// eigenvalues. Each eigenvector's first nonzero component is made real
/// positive so outputs are reproducible across runs. Input must be Hermitian
/// within 1e-8.
EighResult eigh(const ComplexMatrix& hermitian);

/// Hermitian PSD square root: (result)^2 = rho within 1e-9. Eigenvalues in
/// [-1e-8, 0) are clamped to 0 first; anything below -1e-8 is an error.
ComplexMatrix matrix_sqrt(const DensityMatrix& rho);

/// Tr rho^2, in [1/n, 1].
double purity(const DensityMatrix& rho);

/// S(rho) = -sum_i l_i log_base l_i with 0 log 0 := 0. base must be > 1.
double von_neumann_entropy(const DensityMatrix& rho, double base = 2.0);

/// Uhlmann fidelity F(rho, sigma) = Tr sqrt(sqrt(sigma) rho sqrt(sigma)).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

enum class Keep { A, B };

/// Partial trace of a bipartite state with factor dimensions (dim_a, dim_b),
/// keeping the requested factor. Factor A is the most significant index.
DensityMatrix partial_trace(const DensityMatrix& joint, int dim_a, int dim_b,
                            Keep keep);

/// Same contraction on a raw matrix; used where the joint operand is an
/// intermediate too large to re-validate.
ComplexMatrix partial_trace_raw(const ComplexMatrix& joint, int dim_a,
                                int dim_b, Keep keep);

/// Discrete Fourier transform unitary F_jk = exp(2 pi i jk / n) / sqrt(n).
/// Every |F_jk|^2 = 1/n, which is what makes it a diagonal uniformizer.
UnitaryMatrix dft_unitary(int n);

/// Eigenvalues of rho as a validated Spectrum.
Spectrum state_spectrum(const DensityMatrix& rho);

/// The only basis-independent incoherent state, 1_n / n.
DensityMatrix maximally_mixed(int n);

/// Kronecker (tensor) product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace cohere
