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

#include "cohere/basis_opt.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace cohere;
using namespace cohere::test;

namespace {

OptimizerConfig test_config(std::uint64_t seed, int restarts = 16) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.stream = SeededStream(seed);
  return cfg;
}

// Brute-force qubit oracle: every qubit basis change is, up to irrelevant
// diagonal phases, a real rotation after a relative phase on the input, so a
// 2-d grid over (angle, phase) brackets the true l1 maximum.
double qubit_l1_grid_max(const DensityMatrix& rho, int steps = 240) {
  double best = 0.0;
  for (int a = 0; a <= steps; ++a) {
    const double t = 0.5 * std::numbers::pi * a / steps;
    for (int b = 0; b < steps; ++b) {
      const double phi = 2.0 * std::numbers::pi * b / steps;
      ComplexMatrix u(2, 2);
      u(0, 0) = std::cos(t);
      u(0, 1) = -std::sin(t) * Complex(std::cos(phi), std::sin(phi));
      u(1, 0) = std::sin(t) * Complex(std::cos(phi), -std::sin(phi));
      u(1, 1) = std::cos(t);
      const ComplexMatrix rotated = u * rho.mat() * u.adjoint();
      best = std::max(best,
                      std::abs(rotated(0, 1)) + std::abs(rotated(1, 0)));
    }
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("basis_opt");

TEST_CASE("unitary chart") {
  const std::vector<double> zero(4, 0.0);
  CHECK(max_abs(unitary_from_params(zero).mat() -
                ComplexMatrix::Identity(2, 2)) <= 1e-12);

  // H = (pi/2) sigma_x gives exp(i H) = i sigma_x.
  const std::vector<double> half_pi_x = {0.0, 0.0, std::numbers::pi / 2, 0.0};
  ComplexMatrix expected(2, 2);
  expected << Complex(0, 0), Complex(0, 1), Complex(0, 1), Complex(0, 0);
  CHECK(max_abs(unitary_from_params(half_pi_x).mat() - expected) <= 1e-12);

  SeededStream stream(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(stream.next_u64() % 3);
    std::vector<double> theta(static_cast<size_t>(n) * n);
    for (double& v : theta) v = stream.gaussian();
    const UnitaryMatrix u = unitary_from_params(theta);
    REQUIRE(max_abs(u.mat().adjoint() * u.mat() -
                    ComplexMatrix::Identity(n, n)) <= 1e-10);
    // Chart round trip through params_from_hermitian.
    const std::vector<double> back =
        params_from_hermitian(hermitian_log(u));
    const UnitaryMatrix u2 = unitary_from_params(back);
    REQUIRE(max_abs(u.mat() - u2.mat()) <= 1e-9);
  }

  CHECK_THROWS_AS(unitary_from_params({0.0, 0.0, 0.0}), ValidationError);
}

TEST_CASE("optimizer config validation") {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(maximize_over_basis(mixed_qubit(), BasisObjective::kL1, cfg),
                  ValidationError);
}

TEST_CASE("l1 maximization on reference states") {
  // The invariant state scores zero in every basis.
  const OptimizationResult flat = maximize_over_basis(
      maximally_mixed(2), BasisObjective::kL1, test_config(1, 4));
  CHECK(flat.value <= 1e-9);

  // Bloch-radius oracle: c1 of a qubit equals sqrt(2 Tr rho^2 - 1).
  const OptimizationResult mixed =
      maximize_over_basis(mixed_qubit(), BasisObjective::kL1, test_config(2));
  CHECK(mixed.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(qubit_l1_grid_max(mixed_qubit()) <= mixed.value + 1e-6);
  CHECK(qubit_l1_grid_max(mixed_qubit()) ==
        doctest::Approx(0.5).epsilon(1e-3));

  SeededStream stream(42);
  const DensityMatrix pure = random_pure(2, stream);
  CHECK(c1(pure, test_config(3)) == doctest::Approx(1.0).epsilon(1e-6));

  // Maximally coherent qutrit: all off-diagonal moduli reach 1/3.
  ComplexVector psi = ComplexVector::Ones(3) / std::sqrt(3.0);
  const DensityMatrix qutrit((psi * psi.adjoint()).eval());
  CHECK(c1(qutrit, test_config(4)) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("qubit c1 matches the bloch-radius oracle") {
  SeededStream stream(43);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho =
        random_density(2, 1 + static_cast<int>(trial % 2), stream);
    const double oracle = std::sqrt(std::max(0.0, 2.0 * purity(rho) - 1.0));
    REQUIRE(std::abs(c1(rho, test_config(100 + trial)) - oracle) <= 1e-6);
  }
}

TEST_CASE("optimization result is self-consistent and deterministic") {
  SeededStream stream(44);
  const DensityMatrix rho = random_density(3, 3, stream);
  const OptimizationResult a =
      maximize_over_basis(rho, BasisObjective::kL1, test_config(7, 6));
  const OptimizationResult b =
      maximize_over_basis(rho, BasisObjective::kL1, test_config(7, 6));
  CHECK(a.value == b.value);
  CHECK(a.unitary.mat() == b.unitary.mat());
  CHECK(a.iterations == b.iterations);

  // Reported value equals the objective at the reported unitary.
  CHECK(std::abs(basis_coherence_l1(rho, a.unitary) - a.value) <= 1e-10);

  // Never below the uniformizing warm start.
  CHECK(a.value >=
        basis_coherence_l1(rho, uniformizing_unitary(rho)) - 1e-10);
}

TEST_CASE("c1 is unitary invariant up to optimizer tolerance") {
  SeededStream stream(45);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_density(2, 2, stream);
    const ComplexMatrix u = haar_unitary(2, stream).mat();
    const DensityMatrix rotated(u * rho.mat() * u.adjoint());
    const double direct = c1(rho, test_config(200 + trial));
    const double moved = c1(rotated, test_config(300 + trial));
    REQUIRE(std::abs(direct - moved) <= 1e-5);
  }
}

TEST_CASE("l1-distance objective dominates l1 and is reported unasserted") {
  SeededStream stream(46);
  const DensityMatrix rho = random_density(2, 2, stream);
  const OptimizationResult l1 =
      maximize_over_basis(rho, BasisObjective::kL1, test_config(8, 8));
  const OptimizationResult l1d =
      maximize_over_basis(rho, BasisObjective::kL1Distance, test_config(8, 8));
  // The distance objective adds nonnegative diagonal terms at any basis.
  CHECK(l1d.value >= l1.value - 1e-9);
}

TEST_CASE("validate_closed_forms") {
  const ClosedFormValidation mixed =
      validate_closed_forms(mixed_qubit(), 200, test_config(9, 4));
  CHECK(mixed.closed_l2 == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(mixed.best_re == doctest::Approx(0.18872187554086717).epsilon(1e-6));
  CHECK(mixed.best_l2 <= mixed.closed_l2 + 1e-9);
  CHECK(mixed.best_re <= mixed.closed_re + 1e-9);
  CHECK(std::abs(mixed.uniformizer_l2 - mixed.closed_l2) <= 1e-9);
  CHECK(std::abs(mixed.uniformizer_re - mixed.closed_re) <= 1e-9);

  SeededStream stream(47);
  const DensityMatrix qutrit = random_density(3, 3, stream);
  const ClosedFormValidation v =
      validate_closed_forms(qutrit, 500, test_config(10, 4));
  CHECK(v.best_l2 <= v.closed_l2 + 1e-9);
  CHECK(v.best_re <= v.closed_re + 1e-9);
  CHECK(v.samples == 500);
}

TEST_CASE("measure report with c1") {
  const MeasureReport report =
      measure_report_with_c1(mixed_qubit(), 2.0, test_config(11));
  REQUIRE(report.c1.has_value());
  CHECK(*report.c1 == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(report.c2 == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_SUITE_END();
