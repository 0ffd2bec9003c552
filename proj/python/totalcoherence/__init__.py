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

"""Basis-independent quantum-coherence toolkit.

Closed-form total-coherence measures of a density matrix, the constructive
basis that attains them, a unitary-group optimizer for the l1 measure, exact
simulation of the controlled cyclic-shift (swap test) circuit that measures
Tr rho^k, spectrum recovery from the measured moments, and the coherence cost
of DQC1/QOM-style probing schemes.

States and unitaries are plain numpy complex arrays; every function validates
its inputs (Hermiticity, unit trace, positivity, unitarity) and raises
``ValueError`` on invalid ones.
"""

from ._core import (
    KrausChannel,
    NumericalError,
    SeededStream,
    ValidationError,
    __version__,
    apply_channel,
    basis_coherence_l1,
    basis_coherence_l2,
    basis_coherence_re,
    c1,
    c2,
    c_re,
    c_skew,
    c_trace,
    controlled_unitary,
    delta_c,
    dft_unitary,
    dqc1_delta,
    fidelity,
    generalized_swap,
    haar_unitary,
    matrix_sqrt,
    maximally_mixed,
    maximize_over_basis,
    measure_report,
    measures_from_moments,
    moments_from_circuit,
    partial_trace,
    probe_cost,
    probe_state,
    purity,
    qom_overlap,
    random_density,
    random_pure,
    random_unital_channel,
    run_probe_circuit,
    sample_swap_test,
    spectrum,
    spectrum_from_moments,
    swap_test_probability,
    uniformizing_unitary,
    unitary_from_params,
    von_neumann_entropy,
)

__all__ = [
    "KrausChannel",
    "NumericalError",
    "SeededStream",
    "ValidationError",
    "__version__",
    "apply_channel",
    "basis_coherence_l1",
    "basis_coherence_l2",
    "basis_coherence_re",
    "c1",
    "c2",
    "c_re",
    "c_skew",
    "c_trace",
    "controlled_unitary",
    "delta_c",
    "dft_unitary",
    "dqc1_delta",
    "fidelity",
    "generalized_swap",
    "haar_unitary",
    "matrix_sqrt",
    "maximally_mixed",
    "maximize_over_basis",
    "measure_report",
    "measures_from_moments",
    "moments_from_circuit",
    "partial_trace",
    "probe_cost",
    "probe_state",
    "purity",
    "qom_overlap",
    "random_density",
    "random_pure",
    "random_unital_channel",
    "run_probe_circuit",
    "sample_swap_test",
    "spectrum",
    "spectrum_from_moments",
    "swap_test_probability",
    "uniformizing_unitary",
    "unitary_from_params",
    "von_neumann_entropy",
]
