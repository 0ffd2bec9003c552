# Copyright 2026 The totalcoherence Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import totalcoherence as tc

MIXED_QUBIT = np.diag([0.75, 0.25]).astype(complex)


def test_closed_form_measures():
    assert tc.c2(MIXED_QUBIT) == pytest.approx(0.125, abs=1e-12)
    assert tc.c_re(MIXED_QUBIT) == pytest.approx(0.18872187554086717, abs=1e-9)
    assert tc.c_skew(MIXED_QUBIT) == pytest.approx(0.06698729810778065, abs=1e-9)
    assert tc.c_trace(MIXED_QUBIT) == pytest.approx(0.5, abs=1e-12)

    report = tc.measure_report(MIXED_QUBIT)
    assert report["purity"] == pytest.approx(0.625, abs=1e-12)
    assert report["c2"] == pytest.approx(report["purity"] - 0.5, abs=1e-12)
    assert "c1" not in report


def test_input_validation():
    with pytest.raises(ValueError):
        tc.c2(np.array([[1.0, 0.2], [0.0, 0.0]], dtype=complex))
    with pytest.raises(ValueError):
        tc.probe_state([0.9, 0.9, 0.9])


def test_haar_determinism_and_unitarity():
    a = tc.haar_unitary(4, tc.SeededStream(7))
    b = tc.haar_unitary(4, tc.SeededStream(7))
    assert np.array_equal(a, b)
    assert np.allclose(a @ a.conj().T, np.eye(4), atol=1e-10)


def test_uniformizing_unitary_attains_c2():
    stream = tc.SeededStream(11)
    rho = tc.random_density(3, 3, stream)
    u = tc.uniformizing_unitary(rho)
    rotated = u @ rho @ u.conj().T
    assert np.allclose(np.diag(rotated).real, 1.0 / 3.0, atol=1e-10)
    assert tc.basis_coherence_l2(rho, u) == pytest.approx(tc.c2(rho), abs=1e-10)


def test_swap_test_matches_matrix_powers():
    stream = tc.SeededStream(13)
    rho = tc.random_density(3, 3, stream)
    for k in (1, 2, 3):
        expected = (1.0 + np.trace(np.linalg.matrix_power(rho, k)).real) / 2.0
        assert tc.swap_test_probability(rho, k) == pytest.approx(expected, abs=1e-10)


def test_moment_pipeline_round_trip():
    stream = tc.SeededStream(17)
    rho = tc.random_density(3, 3, stream)
    moments = tc.moments_from_circuit(rho, 3)
    recovered = tc.spectrum_from_moments(3, moments)
    direct = np.sort(np.linalg.eigvalsh(rho))[::-1]
    assert np.allclose(recovered, direct, atol=1e-6)

    report = tc.measures_from_moments(3, moments)
    assert report["c2"] == pytest.approx(tc.c2(rho), abs=1e-8)


def test_shot_sampling_is_seeded():
    first = tc.sample_swap_test(MIXED_QUBIT, 2, 5000, tc.SeededStream(23))
    second = tc.sample_swap_test(MIXED_QUBIT, 2, 5000, tc.SeededStream(23))
    assert first["plus_count"] == second["plus_count"]
    assert abs(first["estimate"] - 0.625) < 0.05


def test_probe_and_qom():
    ground = np.diag([1.0, 0.0]).astype(complex)
    excited = np.diag([0.0, 1.0]).astype(complex)
    overlap, delta = tc.qom_overlap(ground, excited)
    assert overlap == pytest.approx(0.0, abs=1e-12)
    assert delta == pytest.approx(0.5, abs=1e-12)

    sigma_z = np.diag([1.0, -1.0]).astype(complex)
    trace, delta = tc.dqc1_delta(sigma_z, 1.0)
    assert abs(trace) == pytest.approx(0.0, abs=1e-12)
    assert delta == pytest.approx(0.5, abs=1e-12)

    mm4 = np.eye(4, dtype=complex) / 4.0
    zi = np.kron(sigma_z, np.eye(2)).astype(complex)
    cost = tc.probe_cost([0.0, 0.0, 1.0], mm4, [zi, zi.conj().T])
    assert cost == pytest.approx(1.0, abs=1e-12)

    result = tc.run_probe_circuit([0.0, 0.0, 1.0], mm4, zi)
    assert np.allclose(result["closed"], result["simulated"], atol=1e-10)


def test_c1_matches_bloch_radius():
    stream = tc.SeededStream(29)
    rho = tc.random_density(2, 2, stream)
    oracle = math.sqrt(max(0.0, 2.0 * tc.purity(rho) - 1.0))
    assert tc.c1(rho, restarts=8, seed=3) == pytest.approx(oracle, abs=1e-6)


def test_channels():
    stream = tc.SeededStream(31)
    channel = tc.random_unital_channel(2, 3, stream)
    assert channel.unital
    rho = tc.random_density(2, 2, stream)
    mapped = tc.apply_channel(channel, rho)
    assert np.trace(mapped).real == pytest.approx(1.0, abs=1e-10)
    assert tc.purity(mapped) <= tc.purity(rho) + 1e-9
