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

#include "cohere/sampling.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace cohere {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

SeededStream::SeededStream(std::uint64_t seed, std::string algorithm)
    : seed_(seed), algorithm_(std::move(algorithm)), engine_(seed) {
  if (algorithm_ != kDefaultAlgorithm) {
    std::ostringstream os;
    os << "SeededStream: unknown algorithm identifier '" << algorithm_
       << "' (supported: " << kDefaultAlgorithm << ")";
    throw ValidationError(os.str());
  }
}

std::uint64_t SeededStream::next_u64() {
  return engine_();
}

double SeededStream::uniform01() {
  // 53-bit mantissa; fully determined by the engine output.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex SeededStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

SeededStream SeededStream::split(std::uint64_t index) const {
  const std::uint64_t derived = splitmix64(seed_ ^ splitmix64(index + 1));
  return SeededStream(derived, algorithm_);
}

KrausChannel::KrausChannel(int dim, std::vector<ComplexMatrix> kraus_ops)
    : dim_(dim), kraus_ops_(std::move(kraus_ops)), unital_(false) {
  if (dim_ < 1 || kraus_ops_.empty()) {
    throw ValidationError("KrausChannel: need dim >= 1 and at least one operator");
  }
  for (const ComplexMatrix& k : kraus_ops_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      std::ostringstream os;
      os << "KrausChannel: operator shape " << k.rows() << "x" << k.cols()
         << " does not match dim " << dim_;
      throw ValidationError(os.str());
    }
  }
  const ComplexMatrix eye = ComplexMatrix::Identity(dim_, dim_);
  ComplexMatrix tp = ComplexMatrix::Zero(dim_, dim_);
  ComplexMatrix un = ComplexMatrix::Zero(dim_, dim_);
  for (const ComplexMatrix& k : kraus_ops_) {
    tp += k.adjoint() * k;
    un += k * k.adjoint();
  }
  const double tp_dev = max_abs(tp - eye);
  if (tp_dev > kNumericTol) {
    std::ostringstream os;
    os << "KrausChannel invariant violated: not trace preserving, "
       << "||sum K^dag K - 1||_max = " << tp_dev;
    throw ValidationError(os.str());
  }
  unital_ = max_abs(un - eye) <= kNumericTol;
}

UnitaryMatrix haar_unitary(int n, SeededStream& stream) {
  if (n < 1) {
    throw ValidationError("haar_unitary: dimension must be >= 1");
  }
  ComplexMatrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      g(r, c) = stream.complex_gaussian();
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fold R's diagonal phases into Q so that R has a positive real diagonal;
  // this removes the QR gauge freedom and makes Q Haar-distributed.
  for (int c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    const double a = std::abs(d);
    q.col(c) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return UnitaryMatrix(std::move(q));
}

DensityMatrix random_density(int n, int rank, SeededStream& stream) {
  if (n < 1 || rank < 1 || rank > n) {
    std::ostringstream os;
    os << "random_density: need 1 <= rank <= n, got rank " << rank
       << " for dimension " << n;
    throw ValidationError(os.str());
  }
  ComplexMatrix g(n, rank);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < rank; ++c) {
      g(r, c) = stream.complex_gaussian();
    }
  }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()) * 0.5;
  return DensityMatrix(std::move(m));
}

DensityMatrix random_pure(int n, SeededStream& stream) {
  if (n < 1) {
    throw ValidationError("random_pure: dimension must be >= 1");
  }
  ComplexVector psi(n);
  for (int i = 0; i < n; ++i) {
    psi(i) = stream.complex_gaussian();
  }
  psi.normalize();
  return DensityMatrix((psi * psi.adjoint()).eval());
}

std::vector<double> random_probability_vector(int k, SeededStream& stream) {
  if (k < 1) {
    throw ValidationError("random_probability_vector: need k >= 1");
  }
  std::vector<double> p(static_cast<size_t>(k));
  double sum = 0.0;
  for (double& v : p) {
    v = -std::log(1.0 - stream.uniform01());
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

KrausChannel random_unital_channel(int n, int components,
                                   SeededStream& stream) {
  if (components < 1) {
    throw ValidationError("random_unital_channel: need components >= 1");
  }
  const std::vector<double> p = random_probability_vector(components, stream);
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<size_t>(components));
  for (int i = 0; i < components; ++i) {
    ops.push_back(std::sqrt(p[static_cast<size_t>(i)]) *
                  haar_unitary(n, stream).mat());
  }
  return KrausChannel(n, std::move(ops));
}

DensityMatrix apply_channel(const KrausChannel& channel,
                            const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) {
    std::ostringstream os;
    os << "apply_channel: channel dim " << channel.dim()
       << " does not match state dim " << rho.dim();
    throw ValidationError(os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const ComplexMatrix& k : channel.kraus_ops()) {
    out += k * rho.mat() * k.adjoint();
  }
  out = (out + out.adjoint()) * 0.5;
  return DensityMatrix(std::move(out));
}

}  // namespace cohere
