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

#include "cohere/swapcirc.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <cmath>

using namespace cohere;
using namespace cohere::test;

TEST_SUITE_BEGIN("swapcirc");

TEST_CASE("generalized swap") {
  CHECK(max_abs(generalized_swap(1, 3).mat() -
                ComplexMatrix::Identity(3, 3)) == 0.0);

  // Two qubit copies: the standard SWAP permutation |01> <-> |10>.
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(2, 1) = swap(1, 2) = 1.0;
  CHECK(max_abs(generalized_swap(2, 2).mat() - swap) == 0.0);

  // Tr(V_3 rho (x) rho (x) rho) = Tr rho^3.
  SeededStream stream(51);
  const ComplexMatrix v3 = generalized_swap(3, 2).mat();
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_density(2, 2, stream);
    const ComplexMatrix triple = kron(kron(rho.mat(), rho.mat()), rho.mat());
    const double lhs = (v3 * triple).trace().real();
    const double rhs = (rho.mat() * rho.mat() * rho.mat()).trace().real();
    REQUIRE(std::abs(lhs - rhs) <= 1e-10);
  }

  CHECK_THROWS_AS(generalized_swap(11, 2), ValidationError);  // 2^11 > cap
  CHECK_THROWS_AS(generalized_swap(0, 2), ValidationError);
}

TEST_CASE("controlled unitary") {
  const UnitaryMatrix eye(ComplexMatrix::Identity(2, 2));
  CHECK(max_abs(controlled_unitary(eye).mat() -
                ComplexMatrix::Identity(4, 4)) == 0.0);

  // Controlled sigma_x is the CNOT permutation.
  ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = 1.0;
  cnot(3, 2) = cnot(2, 3) = 1.0;
  CHECK(max_abs(controlled_unitary(UnitaryMatrix(pauli_x())).mat() - cnot) ==
        0.0);

  // Controlled two-qubit swap: the Fredkin permutation, which only exchanges
  // |101> and |110>.
  const ComplexMatrix fredkin =
      controlled_unitary(generalized_swap(2, 2)).mat();
  for (int i = 0; i < 8; ++i) {
    int expected = i;
    if (i == 5) expected = 6;
    if (i == 6) expected = 5;
    for (int j = 0; j < 8; ++j) {
      REQUIRE(fredkin(j, i).real() ==
              doctest::Approx(j == expected ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("swap test probability closed cases") {
  SeededStream stream(52);
  CHECK(swap_test_probability(random_pure(3, stream), 2) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(swap_test_probability(maximally_mixed(2), 2) ==
        doctest::Approx(0.75).epsilon(1e-12));
  CHECK(swap_test_probability(mixed_qubit(), 3) ==
        doctest::Approx(0.71875).epsilon(1e-12));
}

TEST_CASE("circuit reproduces (1 + Tr rho^k) / 2 without assuming it") {
  SeededStream stream(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(stream.next_u64() % 3);
    const int k = 1 + static_cast<int>(stream.next_u64() % 4);
    const DensityMatrix rho = random_density(n, n, stream);
    ComplexMatrix power = rho.mat();
    for (int i = 1; i < k; ++i) power = power * rho.mat();
    const double expected = 0.5 * (1.0 + power.trace().real());
    REQUIRE(std::abs(swap_test_probability(rho, k) - expected) <= 1e-10);
  }
}

TEST_CASE("moment vectors from the circuit") {
  SeededStream stream(54);
  const MomentVector pure = moments_from_circuit(random_pure(3, stream), 3);
  for (double p : pure.moments()) {
    REQUIRE(p == doctest::Approx(1.0).epsilon(1e-10));
  }

  const MomentVector mm = moments_from_circuit(maximally_mixed(2), 2);
  CHECK(mm.moments()[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mm.moments()[1] == doctest::Approx(0.5).epsilon(1e-12));

  const MomentVector mixed = moments_from_circuit(mixed_qubit(), 2);
  CHECK(mixed.moments()[1] == doctest::Approx(0.625).epsilon(1e-12));

  // Moments decrease and match the spectral power sums.
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(stream.next_u64() % 3);
    const DensityMatrix rho = random_density(n, n, stream);
    const MomentVector m = moments_from_circuit(rho, n);
    const Spectrum spec = state_spectrum(rho);
    for (int k = 1; k <= n; ++k) {
      double power_sum = 0.0;
      for (double l : spec.values()) power_sum += std::pow(l, k);
      REQUIRE(std::abs(m.moments()[static_cast<size_t>(k - 1)] - power_sum) <=
              1e-10);
      if (k > 1) {
        REQUIRE(m.moments()[static_cast<size_t>(k - 1)] <=
                m.moments()[static_cast<size_t>(k - 2)] + 1e-9);
      }
    }
  }

  CHECK_THROWS_AS(moments_from_circuit(mixed_qubit(), 3), ValidationError);
}

TEST_CASE("moment vector invariants") {
  CHECK_THROWS_AS(MomentVector(2, {0.9, 0.5}), ValidationError);
  CHECK_THROWS_AS(MomentVector(2, {1.0, 0.5, 0.7}), ValidationError);
  CHECK_THROWS_AS(MomentVector(2, {1.0, 1.2}), ValidationError);
  CHECK_THROWS_AS(MomentVector(2, {1.0, 0.4}), ValidationError);  // below 1/n
  CHECK_NOTHROW(MomentVector(2, {1.0, 0.625}));
}

TEST_CASE("finite-shot sampling") {
  SeededStream stream(55);
  const DensityMatrix pure = random_pure(2, stream);
  SeededStream shots_stream(56);
  const ShotRecord sure = sample_swap_test(pure, 2, 1000, shots_stream);
  CHECK(sure.plus_count == sure.shots);

  SeededStream s1(57), s2(57);
  const ShotRecord a = sample_swap_test(mixed_qubit(), 2, 10000, s1);
  const ShotRecord b = sample_swap_test(mixed_qubit(), 2, 10000, s2);
  CHECK(a.plus_count == b.plus_count);

  // Empirical standard deviation tracks the binomial prediction.
  const double p = swap_test_probability(mixed_qubit(), 2);  // 0.8125
  const long long shots = 100000;
  const int trials = 100;
  SeededStream noise(58);
  double mean = 0.0, sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double est =
        sample_swap_test(mixed_qubit(), 2, shots, noise).estimate();
    mean += est;
    sq += est * est;
  }
  mean /= trials;
  const double sd = std::sqrt((sq / trials - mean * mean) *
                              trials / (trials - 1.0));
  const double predicted = 2.0 * std::sqrt(p * (1.0 - p) / shots);
  CHECK(std::abs(sd - predicted) <= 0.2 * predicted);
}

TEST_CASE("spectrum recovery from exact moments") {
  const Spectrum mm = spectrum_from_moments(MomentVector(2, {1.0, 0.5}));
  CHECK(mm[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(mm[1] == doctest::Approx(0.5).epsilon(1e-10));

  const Spectrum mixed = spectrum_from_moments(MomentVector(2, {1.0, 0.625}));
  CHECK(mixed[0] == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(mixed[1] == doctest::Approx(0.25).epsilon(1e-10));

  const Spectrum pure = spectrum_from_moments(MomentVector(3, {1.0, 1.0, 1.0}));
  CHECK(pure[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(pure[1]) <= 1e-6);
  CHECK(std::abs(pure[2]) <= 1e-6);

  SeededStream stream(59);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(stream.next_u64() % 3);
    const DensityMatrix rho = random_density(n, n, stream);
    const Spectrum recovered =
        spectrum_from_moments(moments_from_circuit(rho, n));
    const Spectrum direct = state_spectrum(rho);
    for (int i = 0; i < n; ++i) {
      REQUIRE(std::abs(recovered[i] - direct[i]) <= 1e-6);
    }
  }
}

TEST_CASE("spectrum recovery rejects inconsistent moments") {
  // Power sums of a genuinely complex root triple (0.43333 +- 0.05i, 0.13333):
  // passes the moment-vector bounds but cannot come from a density matrix.
  const double a = 13.0 / 30.0, b = 0.05, c = 2.0 / 15.0;
  const double p2 = 2.0 * (a * a - b * b) + c * c;
  const double p3 = 2.0 * a * (a * a - 3.0 * b * b) + c * c * c;
  CHECK_THROWS_AS(spectrum_from_moments(MomentVector(3, {1.0, p2, p3})),
                  NumericalError);

  // Negative-root case.
  CHECK_THROWS_AS(spectrum_from_moments(MomentVector(3, {1.0, 0.5, 0.2})),
                  NumericalError);

  // Wrong moment count for the dimension.
  CHECK_THROWS_AS(spectrum_from_moments(MomentVector(3, {1.0, 0.5})),
                  ValidationError);
}

TEST_CASE("measures from moments") {
  // Triple root at 1/3: the companion roots only carry cbrt(eps) accuracy,
  // but the p_2 shortcut keeps c2 exact.
  std::vector<double> flat = {1.0, 1.0 / 3.0, 1.0 / 9.0};
  const MeasureReport zeros = measures_from_moments(MomentVector(3, flat));
  CHECK(std::abs(zeros.c2) <= 1e-9);
  CHECK(std::abs(zeros.c_re) <= 1e-6);
  CHECK(std::abs(zeros.c_skew) <= 1e-4);
  CHECK(std::abs(zeros.c_trace) <= 1e-4);

  const MeasureReport mixed =
      measures_from_moments(MomentVector(2, {1.0, 0.625}));
  CHECK(mixed.c2 == doctest::Approx(0.125).epsilon(1e-9));
  CHECK(mixed.purity == doctest::Approx(0.625).epsilon(1e-9));

  // End-to-end pipeline against the direct report.
  SeededStream stream(60);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(3, 3, stream);
    const MeasureReport via_moments =
        measures_from_moments(moments_from_circuit(rho, 3));
    const MeasureReport direct = measure_report(rho);
    REQUIRE(std::abs(via_moments.c2 - direct.c2) <= 1e-8);
    REQUIRE(std::abs(via_moments.c_re - direct.c_re) <= 1e-8);
    REQUIRE(std::abs(via_moments.c_skew - direct.c_skew) <= 1e-8);
    REQUIRE(std::abs(via_moments.c_trace - direct.c_trace) <= 1e-8);
  }
}

TEST_SUITE_END();
