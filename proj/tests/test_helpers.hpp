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
#include "cohere/sampling.hpp"

namespace cohere::test {

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

// diag(0.75, 0.25), the mixed-qubit fixture used throughout.
inline DensityMatrix mixed_qubit() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  return DensityMatrix(m);
}

inline DensityMatrix ground_state(int n = 2) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(0, 0) = 1.0;
  return DensityMatrix(m);
}

inline DensityMatrix diag_state(const std::vector<double>& populations) {
  const int n = static_cast<int>(populations.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = populations[static_cast<size_t>(i)];
  return DensityMatrix(m);
}

// Random Hermitian with entries of order 1.
inline ComplexMatrix random_hermitian(int n, SeededStream& stream) {
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = stream.complex_gaussian();
  }
  return ((m + m.adjoint()) * 0.5).eval();
}

}  // namespace cohere::test
