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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cohere {

/// Deterministic random stream: identical (seed, algorithm) pairs produce
/// identical sample sequences, including across platforms (mt19937_64 and the
/// Box-Muller transform are both fully specified). Streams are never shared
/// between workers; derive independent child streams with split().
class SeededStream {
 public:
  static constexpr const char* kDefaultAlgorithm = "mt19937_64/box-muller/v1";

  explicit SeededStream(std::uint64_t seed,
                        std::string algorithm = kDefaultAlgorithm);

  std::uint64_t seed() const { return seed_; }
  const std::string& algorithm() const { return algorithm_; }

  std::uint64_t next_u64();
  double uniform01();  // [0, 1)
  double gaussian();   // standard normal
  Complex complex_gaussian();  // independent N(0,1) real and imaginary parts

  /// Child stream with a seed derived from (seed, index) via splitmix64.
  SeededStream split(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::string algorithm_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Kraus representation {K_i} of a channel. Construction enforces trace
/// preservation ||sum K^dag K - 1||_max <= 1e-9 and sets the unital flag
/// iff ||sum K K^dag - 1||_max <= 1e-9.
class KrausChannel {
 public:
  KrausChannel(int dim, std::vector<ComplexMatrix> kraus_ops);

  int dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_ops_; }
  bool unital() const { return unital_; }

 private:
  int dim_;
  std::vector<ComplexMatrix> kraus_ops_;
  bool unital_;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phase
/// correction that normalizes R's diagonal to positive reals.
UnitaryMatrix haar_unitary(int n, SeededStream& stream);

/// G G^dag / Tr(G G^dag) for an n x r complex Gaussian G; rank <= r.
DensityMatrix random_density(int n, int rank, SeededStream& stream);

/// Projector onto a normalized complex Gaussian vector.
DensityMatrix random_pure(int n, SeededStream& stream);

/// Uniform probability vector on the simplex (normalized exponentials).
std::vector<double> random_probability_vector(int k, SeededStream& stream);

/// Mixed-unitary channel K_i = sqrt(p_i) U_i with Haar U_i and simplex-uniform
/// weights; trace preserving and unital by construction.
KrausChannel random_unital_channel(int n, int components, SeededStream& stream);

/// sum_i K_i rho K_i^dag.
DensityMatrix apply_channel(const KrausChannel& channel,
                            const DensityMatrix& rho);

}  // namespace cohere
