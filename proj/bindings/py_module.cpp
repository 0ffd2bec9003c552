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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohere/basis_opt.hpp"
#include "cohere/measures.hpp"
#include "cohere/probe.hpp"
#include "cohere/qmat.hpp"
#include "cohere/sampling.hpp"
#include "cohere/swapcirc.hpp"

namespace py = pybind11;
using namespace cohere;

namespace {

DensityMatrix as_density(const ComplexMatrix& m) { return DensityMatrix(m); }
UnitaryMatrix as_unitary(const ComplexMatrix& m) { return UnitaryMatrix(m); }

BlochVector as_bloch(const std::vector<double>& p) {
  if (p.size() != 3) {
    throw ValidationError("bloch vector needs exactly three components");
  }
  return BlochVector(p[0], p[1], p[2]);
}

OptimizerConfig make_config(int restarts, int max_iters, double step_init,
                            double tol, std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iters = max_iters;
  cfg.step_init = step_init;
  cfg.tol = tol;
  cfg.stream = SeededStream(seed);
  return cfg;
}

py::dict report_to_dict(const MeasureReport& report) {
  py::dict d;
  d["dim"] = report.dim;
  d["purity"] = report.purity;
  d["c2"] = report.c2;
  d["c_re"] = report.c_re;
  d["c_skew"] = report.c_skew;
  d["c_trace"] = report.c_trace;
  if (report.c1.has_value()) d["c1"] = *report.c1;
  d["log_base"] = report.log_base;
  return d;
}

py::dict result_to_dict(const OptimizationResult& result) {
  py::dict d;
  d["value"] = result.value;
  d["unitary"] = result.unitary.mat();
  d["iterations"] = result.iterations;
  d["converged"] = result.converged;
  return d;
}

std::vector<double> spectrum_values(const Spectrum& s) { return s.values(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Basis-independent quantum-coherence toolkit (C++ core)";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError",
                                         PyExc_RuntimeError);

  py::class_<SeededStream>(m, "SeededStream",
                           "Deterministic random stream; identical (seed, "
                           "algorithm) pairs reproduce identical samples.")
      .def(py::init<std::uint64_t, std::string>(), py::arg("seed"),
           py::arg("algorithm") = SeededStream::kDefaultAlgorithm)
      .def_property_readonly("seed", &SeededStream::seed)
      .def_property_readonly("algorithm", &SeededStream::algorithm)
      .def("uniform01", &SeededStream::uniform01)
      .def("gaussian", &SeededStream::gaussian)
      .def("split", &SeededStream::split, py::arg("index"));

  py::class_<KrausChannel>(m, "KrausChannel")
      .def(py::init([](int dim, const std::vector<ComplexMatrix>& ops) {
             return KrausChannel(dim, ops);
           }),
           py::arg("dim"), py::arg("kraus_ops"))
      .def_property_readonly("dim", &KrausChannel::dim)
      .def_property_readonly("kraus_ops", &KrausChannel::kraus_ops)
      .def_property_readonly("unital", &KrausChannel::unital);

  // State primitives.
  m.def("purity", [](const ComplexMatrix& rho) { return purity(as_density(rho)); },
        py::arg("rho"), "Tr rho^2.");
  m.def("von_neumann_entropy",
        [](const ComplexMatrix& rho, double base) {
          return von_neumann_entropy(as_density(rho), base);
        },
        py::arg("rho"), py::arg("base") = 2.0);
  m.def("fidelity",
        [](const ComplexMatrix& rho, const ComplexMatrix& sigma) {
          return fidelity(as_density(rho), as_density(sigma));
        },
        py::arg("rho"), py::arg("sigma"));
  m.def("matrix_sqrt",
        [](const ComplexMatrix& rho) { return matrix_sqrt(as_density(rho)); },
        py::arg("rho"));
  m.def("partial_trace",
        [](const ComplexMatrix& joint, int dim_a, int dim_b,
           const std::string& keep) {
          if (keep != "A" && keep != "B") {
            throw ValidationError("keep must be 'A' or 'B'");
          }
          return partial_trace(as_density(joint), dim_a, dim_b,
                               keep == "A" ? Keep::A : Keep::B)
              .mat();
        },
        py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"),
        py::arg("keep") = "A");
  m.def("dft_unitary", [](int n) { return dft_unitary(n).mat(); },
        py::arg("n"));
  m.def("spectrum",
        [](const ComplexMatrix& rho) {
          return spectrum_values(state_spectrum(as_density(rho)));
        },
        py::arg("rho"), "Descending eigenvalues of a density matrix.");
  m.def("maximally_mixed", [](int n) { return maximally_mixed(n).mat(); },
        py::arg("n"));

  // Closed-form measures.
  m.def("c2", [](const ComplexMatrix& rho) { return c2(as_density(rho)); },
        py::arg("rho"), "Tr rho^2 - 1/n.");
  m.def("c_re",
        [](const ComplexMatrix& rho, double base) {
          return c_re(as_density(rho), base);
        },
        py::arg("rho"), py::arg("base") = 2.0, "log n - S(rho).");
  m.def("c_skew",
        [](const ComplexMatrix& rho) { return c_skew(as_density(rho)); },
        py::arg("rho"), "1 - (sum_i sqrt(l_i))^2 / n.");
  m.def("c_trace",
        [](const ComplexMatrix& rho) { return c_trace(as_density(rho)); },
        py::arg("rho"), "sum_i |l_i - 1/n|.");
  m.def("basis_coherence_l2",
        [](const ComplexMatrix& rho, const ComplexMatrix& u) {
          return basis_coherence_l2(as_density(rho), as_unitary(u));
        },
        py::arg("rho"), py::arg("u"));
  m.def("basis_coherence_re",
        [](const ComplexMatrix& rho, const ComplexMatrix& u, double base) {
          return basis_coherence_re(as_density(rho), as_unitary(u), base);
        },
        py::arg("rho"), py::arg("u"), py::arg("base") = 2.0);
  m.def("basis_coherence_l1",
        [](const ComplexMatrix& rho, const ComplexMatrix& u) {
          return basis_coherence_l1(as_density(rho), as_unitary(u));
        },
        py::arg("rho"), py::arg("u"));
  m.def("uniformizing_unitary",
        [](const ComplexMatrix& rho) {
          return uniformizing_unitary(as_density(rho)).mat();
        },
        py::arg("rho"),
        "Unitary that makes the diagonal of U rho U^dag uniform.");
  m.def("measure_report",
        [](const ComplexMatrix& rho, double base, bool with_c1, int restarts,
           int max_iters, double step_init, double tol, std::uint64_t seed) {
          const DensityMatrix state = as_density(rho);
          if (!with_c1) return report_to_dict(measure_report(state, base));
          return report_to_dict(measure_report_with_c1(
              state, base,
              make_config(restarts, max_iters, step_init, tol, seed)));
        },
        py::arg("rho"), py::arg("base") = 2.0, py::arg("with_c1") = false,
        py::arg("restarts") = 16, py::arg("max_iters") = 2000,
        py::arg("step_init") = 0.1, py::arg("tol") = 1e-10,
        py::arg("seed") = 1);

  // Sampling.
  m.def("haar_unitary",
        [](int n, SeededStream& stream) { return haar_unitary(n, stream).mat(); },
        py::arg("n"), py::arg("stream"));
  m.def("random_density",
        [](int n, int rank, SeededStream& stream) {
          return random_density(n, rank, stream).mat();
        },
        py::arg("n"), py::arg("rank"), py::arg("stream"));
  m.def("random_pure",
        [](int n, SeededStream& stream) { return random_pure(n, stream).mat(); },
        py::arg("n"), py::arg("stream"));
  m.def("random_unital_channel",
        [](int n, int components, SeededStream& stream) {
          return random_unital_channel(n, components, stream);
        },
        py::arg("n"), py::arg("components"), py::arg("stream"));
  m.def("apply_channel",
        [](const KrausChannel& channel, const ComplexMatrix& rho) {
          return apply_channel(channel, as_density(rho)).mat();
        },
        py::arg("channel"), py::arg("rho"));

  // Basis optimization.
  m.def("unitary_from_params",
        [](const std::vector<double>& theta) {
          return unitary_from_params(theta).mat();
        },
        py::arg("theta"));
  m.def("c1",
        [](const ComplexMatrix& rho, int restarts, int max_iters,
           double step_init, double tol, std::uint64_t seed) {
          return c1(as_density(rho),
                    make_config(restarts, max_iters, step_init, tol, seed));
        },
        py::arg("rho"), py::arg("restarts") = 16, py::arg("max_iters") = 2000,
        py::arg("step_init") = 0.1, py::arg("tol") = 1e-10,
        py::arg("seed") = 1,
        "Basis-optimized l1 coherence max_U sum_{i!=j} |(U rho U^dag)_ij|.");
  m.def("maximize_over_basis",
        [](const ComplexMatrix& rho, const std::string& objective,
           int restarts, int max_iters, double step_init, double tol,
           std::uint64_t seed) {
          BasisObjective obj;
          if (objective == "l1") {
            obj = BasisObjective::kL1;
          } else if (objective == "l1-distance") {
            obj = BasisObjective::kL1Distance;
          } else {
            throw ValidationError("objective must be 'l1' or 'l1-distance'");
          }
          return result_to_dict(maximize_over_basis(
              as_density(rho), obj,
              make_config(restarts, max_iters, step_init, tol, seed)));
        },
        py::arg("rho"), py::arg("objective") = "l1", py::arg("restarts") = 16,
        py::arg("max_iters") = 2000, py::arg("step_init") = 0.1,
        py::arg("tol") = 1e-10, py::arg("seed") = 1);

  // Swap-test circuit.
  m.def("generalized_swap",
        [](int copies, int d) { return generalized_swap(copies, d).mat(); },
        py::arg("copies"), py::arg("d"));
  m.def("controlled_unitary",
        [](const ComplexMatrix& u) {
          return controlled_unitary(as_unitary(u)).mat();
        },
        py::arg("u"));
  m.def("swap_test_probability",
        [](const ComplexMatrix& rho, int copies) {
          return swap_test_probability(as_density(rho), copies);
        },
        py::arg("rho"), py::arg("copies"));
  m.def("moments_from_circuit",
        [](const ComplexMatrix& rho, int k_max) {
          return moments_from_circuit(as_density(rho), k_max).moments();
        },
        py::arg("rho"), py::arg("k_max"));
  m.def("sample_swap_test",
        [](const ComplexMatrix& rho, int copies, long long shots,
           SeededStream& stream) {
          const ShotRecord record =
              sample_swap_test(as_density(rho), copies, shots, stream);
          py::dict d;
          d["shots"] = record.shots;
          d["plus_count"] = record.plus_count;
          d["estimate"] = record.estimate();
          return d;
        },
        py::arg("rho"), py::arg("copies"), py::arg("shots"),
        py::arg("stream"));
  m.def("spectrum_from_moments",
        [](int dim, const std::vector<double>& moments) {
          return spectrum_values(
              spectrum_from_moments(MomentVector(dim, moments)));
        },
        py::arg("dim"), py::arg("moments"));
  m.def("measures_from_moments",
        [](int dim, const std::vector<double>& moments, double base) {
          return report_to_dict(
              measures_from_moments(MomentVector(dim, moments), base));
        },
        py::arg("dim"), py::arg("moments"), py::arg("base") = 2.0);

  // Probing cost.
  m.def("probe_state",
        [](const std::vector<double>& p) { return probe_state(as_bloch(p)).mat(); },
        py::arg("bloch"));
  m.def("run_probe_circuit",
        [](const std::vector<double>& p, const ComplexMatrix& rho_s,
           const ComplexMatrix& u) {
          const ProbeCircuitResult result =
              run_probe_circuit(as_bloch(p), as_density(rho_s), as_unitary(u));
          py::dict d;
          d["closed"] = result.closed.mat();
          d["simulated"] = result.simulated.mat();
          d["warnings"] = result.warnings;
          return d;
        },
        py::arg("bloch"), py::arg("rho_s"), py::arg("u"));
  m.def("delta_c",
        [](const std::vector<double>& p, const ComplexMatrix& rho_s,
           const ComplexMatrix& u) {
          return delta_c(as_bloch(p), as_density(rho_s), as_unitary(u));
        },
        py::arg("bloch"), py::arg("rho_s"), py::arg("u"));
  m.def("probe_cost",
        [](const std::vector<double>& p, const ComplexMatrix& rho_s,
           const std::vector<ComplexMatrix>& unitaries) {
          std::vector<UnitaryMatrix> us;
          us.reserve(unitaries.size());
          for (const ComplexMatrix& u : unitaries) us.push_back(as_unitary(u));
          return probe_cost(
              ProbeScheme{as_bloch(p), as_density(rho_s), std::move(us)});
        },
        py::arg("bloch"), py::arg("rho_s"), py::arg("unitaries"));
  m.def("dqc1_delta",
        [](const ComplexMatrix& u, double p3) {
          const Dqc1Result result = dqc1_delta(as_unitary(u), p3);
          return py::make_tuple(result.normalized_trace, result.delta_c);
        },
        py::arg("u"), py::arg("p3") = 1.0,
        "Returns (Tr U / 2^n, coherence change).");
  m.def("qom_overlap",
        [](const ComplexMatrix& rho1, const ComplexMatrix& rho2) {
          const QomResult result =
              qom_overlap(as_density(rho1), as_density(rho2));
          return py::make_tuple(result.overlap, result.delta_c);
        },
        py::arg("rho1"), py::arg("rho2"),
        "Returns (Tr rho1 rho2, coherence change).");

#ifdef COHERE_VERSION
  m.attr("__version__") = COHERE_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
