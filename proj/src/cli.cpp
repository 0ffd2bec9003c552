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

#include "cohere/cli.hpp"

#include "cohere/basis_opt.hpp"
#include "cohere/io.hpp"
#include "cohere/measures.hpp"
#include "cohere/probe.hpp"
#include "cohere/sampling.hpp"
#include "cohere/swapcirc.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace cohere::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct SuiteOutcome {
  long checks = 0;
  long violations = 0;
};

// Samples are independently seeded through stream.split(sample), so the
// outcome is identical for any worker count.
SuiteOutcome run_sharded(long samples, int jobs,
                         const std::function<SuiteOutcome(long)>& sample_fn) {
  jobs = static_cast<int>(std::clamp<long>(jobs, 1, std::max<long>(1, samples)));
  std::vector<SuiteOutcome> partial(static_cast<size_t>(jobs));
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t]() {
      try {
        SuiteOutcome local;
        for (long s = t; s < samples; s += jobs) {
          const SuiteOutcome one = sample_fn(s);
          local.checks += one.checks;
          local.violations += one.violations;
        }
        partial[static_cast<size_t>(t)] = local;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
  SuiteOutcome total;
  for (const SuiteOutcome& p : partial) {
    total.checks += p.checks;
    total.violations += p.violations;
  }
  return total;
}

long check(bool ok) { return ok ? 0 : 1; }

double measure_value(int which, const DensityMatrix& rho, double base) {
  switch (which) {
    case 0: return c2(rho);
    case 1: return c_re(rho, base);
    case 2: return c_skew(rho);
    default: return c_trace(rho);
  }
}

BlochVector random_bloch(SeededStream& stream) {
  double v[3];
  for (double& x : v) x = 2.0 * stream.uniform01() - 1.0;
  const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (r > 1.0) {
    for (double& x : v) x /= r;
  }
  return BlochVector(v[0], v[1], v[2]);
}

SuiteOutcome suite_invariance(long sample, const SeededStream& base_stream,
                              double base) {
  SeededStream stream = base_stream.split(static_cast<std::uint64_t>(sample));
  const int n = 2 + static_cast<int>(sample % 3);
  const DensityMatrix rho = random_density(n, n, stream);
  const UnitaryMatrix u = haar_unitary(n, stream);
  const DensityMatrix rotated(
      (u.mat() * rho.mat() * u.mat().adjoint()).eval());
  SuiteOutcome out;
  for (int m = 0; m < 4; ++m) {
    ++out.checks;
    out.violations += check(std::abs(measure_value(m, rotated, base) -
                                     measure_value(m, rho, base)) <=
                            kNumericTol);
  }
  return out;
}

SuiteOutcome suite_convexity(long sample, const SeededStream& base_stream,
                             double base) {
  SeededStream stream = base_stream.split(static_cast<std::uint64_t>(sample));
  const int n = 2 + static_cast<int>(sample % 3);
  const int k = 2 + static_cast<int>((sample / 3) % 3);
  const std::vector<double> weights = random_probability_vector(k, stream);
  std::vector<DensityMatrix> parts;
  parts.reserve(static_cast<size_t>(k));
  ComplexMatrix mix = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < k; ++i) {
    parts.push_back(random_density(n, n, stream));
    mix += weights[static_cast<size_t>(i)] * parts.back().mat();
  }
  const DensityMatrix mixed(std::move(mix));
  SuiteOutcome out;
  for (int m = 0; m < 4; ++m) {
    double bound = 0.0;
    for (int i = 0; i < k; ++i) {
      bound += weights[static_cast<size_t>(i)] *
               measure_value(m, parts[static_cast<size_t>(i)], base);
    }
    ++out.checks;
    out.violations +=
        check(measure_value(m, mixed, base) <= bound + kNumericTol);
  }
  return out;
}

SuiteOutcome suite_monotonicity(long sample, const SeededStream& base_stream,
                                double base) {
  SeededStream stream = base_stream.split(static_cast<std::uint64_t>(sample));
  const int n = 2 + static_cast<int>(sample % 3);
  const int k = 1 + static_cast<int>((sample / 3) % 4);
  const KrausChannel channel = random_unital_channel(n, k, stream);
  const DensityMatrix rho = random_density(n, n, stream);
  const DensityMatrix mapped = apply_channel(channel, rho);
  SuiteOutcome out;
  for (int m = 0; m < 4; ++m) {
    ++out.checks;
    out.violations += check(measure_value(m, mapped, base) <=
                            measure_value(m, rho, base) + kNumericTol);
  }
  ++out.checks;
  out.violations += check(purity(mapped) <= purity(rho) + kNumericTol);
  return out;
}

SuiteOutcome suite_average_coherence(long sample,
                                     const SeededStream& base_stream,
                                     double base) {
  SeededStream stream = base_stream.split(static_cast<std::uint64_t>(sample));
  const int n = 2 + static_cast<int>(sample % 3);
  const int k = 1 + static_cast<int>((sample / 3) % 4);
  const std::vector<double> weights = random_probability_vector(k, stream);
  std::vector<UnitaryMatrix> branches;
  branches.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) branches.push_back(haar_unitary(n, stream));
  const DensityMatrix rho = random_density(n, n, stream);
  SuiteOutcome out;
  for (int m = 0; m < 4; ++m) {
    double average = 0.0;
    for (int i = 0; i < k; ++i) {
      const ComplexMatrix& u = branches[static_cast<size_t>(i)].mat();
      average += weights[static_cast<size_t>(i)] *
                 measure_value(m, DensityMatrix(u * rho.mat() * u.adjoint()),
                               base);
    }
    ++out.checks;
    out.violations +=
        check(std::abs(average - measure_value(m, rho, base)) <= kNumericTol);
  }
  return out;
}

SuiteOutcome suite_optimality(long sample, const SeededStream& base_stream,
                              double base) {
  constexpr int kInnerSamples = 100;
  SeededStream stream = base_stream.split(static_cast<std::uint64_t>(sample));
  const int n = 2 + static_cast<int>(sample % 3);
  const DensityMatrix rho = random_density(n, n, stream);
  const double closed_l2 = c2(rho);
  const double closed_re = c_re(rho, base);
  SuiteOutcome out;
  for (int i = 0; i < kInnerSamples; ++i) {
    const UnitaryMatrix u = haar_unitary(n, stream);
    out.checks += 2;
    out.violations +=
        check(basis_coherence_l2(rho, u) <= closed_l2 + kNumericTol);
    out.violations +=
        check(basis_coherence_re(rho, u, base) <= closed_re + kNumericTol);
  }
  const UnitaryMatrix uni = uniformizing_unitary(rho);
  out.checks += 2;
  out.violations +=
      check(std::abs(basis_coherence_l2(rho, uni) - closed_l2) <= kNumericTol);
  out.violations += check(std::abs(basis_coherence_re(rho, uni, base) -
                                   closed_re) <= kNumericTol);
  return out;
}

SuiteOutcome suite_circuit(long sample, const SeededStream& base_stream,
                           double /*base*/) {
  SeededStream stream = base_stream.split(static_cast<std::uint64_t>(sample));
  const int n = 2 + static_cast<int>(sample % 3);
  const int k = 1 + static_cast<int>((sample / 3) % 4);
  const DensityMatrix rho = random_density(n, n, stream);
  SuiteOutcome out;

  ComplexMatrix power = rho.mat();
  for (int i = 1; i < k; ++i) power = power * rho.mat();
  const double expected = 0.5 * (1.0 + power.trace().real());
  ++out.checks;
  out.violations +=
      check(std::abs(swap_test_probability(rho, k) - expected) <= 1e-10);

  const Spectrum recovered =
      spectrum_from_moments(moments_from_circuit(rho, n));
  const Spectrum direct = state_spectrum(rho);
  double max_err = 0.0;
  for (int i = 0; i < n; ++i) {
    max_err = std::max(max_err, std::abs(recovered[i] - direct[i]));
  }
  ++out.checks;
  out.violations += check(max_err <= 1e-6);
  return out;
}

SuiteOutcome suite_probe(long sample, const SeededStream& base_stream,
                         double /*base*/) {
  SeededStream stream = base_stream.split(static_cast<std::uint64_t>(sample));
  const int n = 2 + static_cast<int>(sample % 3);
  const BlochVector bloch = random_bloch(stream);
  const DensityMatrix rho_s = random_density(n, n, stream);
  const UnitaryMatrix u = haar_unitary(n, stream);
  const ProbeCircuitResult result = run_probe_circuit(bloch, rho_s, u);
  SuiteOutcome out;
  ++out.checks;
  out.violations +=
      check(max_abs(result.closed.mat() - result.simulated.mat()) <= 1e-10);
  const double change = c2(probe_state(bloch)) - c2(result.simulated);
  ++out.checks;
  out.violations += check(std::abs(delta_c(bloch, rho_s, u) - change) <= 1e-10);
  return out;
}

SuiteOutcome suite_c1_oracle(long sample, const SeededStream& base_stream,
                             double /*base*/) {
  SeededStream stream = base_stream.split(static_cast<std::uint64_t>(sample));
  const DensityMatrix rho =
      random_density(2, 1 + static_cast<int>(sample % 2), stream);
  OptimizerConfig cfg;
  cfg.stream = stream.split(0xC1);
  const double oracle = std::sqrt(std::max(0.0, 2.0 * purity(rho) - 1.0));
  SuiteOutcome out;
  ++out.checks;
  out.violations += check(std::abs(c1(rho, cfg) - oracle) <= 1e-6);
  return out;
}

struct SuiteSpec {
  const char* name;
  long default_samples;
  SuiteOutcome (*fn)(long, const SeededStream&, double);
};

constexpr SuiteSpec kSuites[] = {
    {"invariance", 500, suite_invariance},
    {"convexity", 500, suite_convexity},
    {"monotonicity", 500, suite_monotonicity},
    {"average-coherence", 500, suite_average_coherence},
    {"optimality", 200, suite_optimality},
    {"circuit", 100, suite_circuit},
    {"probe", 200, suite_probe},
    {"c1-oracle", 20, suite_c1_oracle},
};

OptimizerConfig make_optimizer_config(int restarts, int max_iters, double tol,
                                      std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iters = max_iters;
  cfg.tol = tol;
  cfg.stream = SeededStream(seed);
  return cfg;
}

std::string report_to_csv(const MeasureReport& report) {
  std::ostringstream os;
  os << "schema,dim,purity,c2,c_re,c_skew,c_trace,c1,log_base\n";
  os << "1," << report.dim << "," << format_real(report.purity) << ","
     << format_real(report.c2) << "," << format_real(report.c_re) << ","
     << format_real(report.c_skew) << "," << format_real(report.c_trace)
     << ",";
  if (report.c1.has_value()) os << format_real(*report.c1);
  os << "," << format_real(report.log_base) << "\n";
  return os.str();
}

int run_measure(const std::string& state_path, double base, bool with_c1,
                int restarts, int max_iters, double tol, std::uint64_t seed,
                const std::string& output, std::ostream& out) {
  const DensityMatrix rho = load_density(state_path);
  MeasureReport report;
  if (with_c1) {
    report = measure_report_with_c1(
        rho, base, make_optimizer_config(restarts, max_iters, tol, seed));
  } else {
    report = measure_report(rho, base);
  }
  if (output == "csv") {
    out << report_to_csv(report);
  } else {
    out << report_to_json(report).dump(2) << "\n";
  }
  return 0;
}

int run_optimize(const std::string& state_path, const std::string& objective,
                 int restarts, int max_iters, double tol, std::uint64_t seed,
                 const std::string& emit_unitary, std::ostream& out) {
  const DensityMatrix rho = load_density(state_path);
  const OptimizerConfig cfg =
      make_optimizer_config(restarts, max_iters, tol, seed);
  const auto result_to_json = [](const OptimizationResult& r) {
    ordered_json doc;
    doc["value"] = r.value;
    doc["iterations"] = r.iterations;
    doc["converged"] = r.converged;
    return doc;
  };
  ordered_json doc;
  doc["schema"] = 1;
  doc["seed"] = seed;
  if (objective == "both") {
    const OptimizationResult l1 =
        maximize_over_basis(rho, BasisObjective::kL1, cfg);
    const OptimizationResult l1d =
        maximize_over_basis(rho, BasisObjective::kL1Distance, cfg);
    doc["l1"] = result_to_json(l1);
    doc["l1_distance"] = result_to_json(l1d);
    doc["gap"] = l1d.value - l1.value;
  } else {
    const BasisObjective obj = (objective == "l1-distance")
                                   ? BasisObjective::kL1Distance
                                   : BasisObjective::kL1;
    const OptimizationResult result = maximize_over_basis(rho, obj, cfg);
    doc["objective"] = objective;
    doc["value"] = result.value;
    doc["iterations"] = result.iterations;
    doc["converged"] = result.converged;
    if (!emit_unitary.empty()) {
      save_matrix(emit_unitary, result.unitary.mat());
      doc["unitary_file"] = emit_unitary;
    }
  }
  out << doc.dump(2) << "\n";
  return 0;
}

int run_swap_test(const std::string& state_path, int copies, long long shots,
                  std::uint64_t seed, std::ostream& out) {
  const DensityMatrix rho = load_density(state_path);
  const double probability = swap_test_probability(rho, copies);
  ordered_json doc;
  doc["schema"] = 1;
  doc["dim"] = rho.dim();
  doc["copies"] = copies;
  doc["probability"] = probability;
  doc["moment"] = 2.0 * probability - 1.0;
  if (shots > 0) {
    SeededStream stream(seed);
    const ShotRecord record = sample_swap_test(rho, copies, shots, stream);
    doc["shots"] = record.shots;
    doc["plus_count"] = record.plus_count;
    doc["estimate"] = record.estimate();
    doc["seed"] = seed;
  }
  out << doc.dump(2) << "\n";
  return 0;
}

json complex_to_json(const Complex& z) { return json{z.real(), z.imag()}; }

int run_probe(const std::vector<double>& bloch_raw,
              const std::string& system_path,
              const std::vector<std::string>& unitary_paths, int dqc1_qubits,
              const std::vector<std::string>& qom_paths, std::ostream& out,
              std::ostream& err) {
  if (bloch_raw.size() != 3) {
    throw ValidationError("--bloch needs exactly three components P1,P2,P3");
  }
  const BlochVector bloch(bloch_raw[0], bloch_raw[1], bloch_raw[2]);
  ordered_json doc;
  doc["schema"] = 1;

  if (!qom_paths.empty()) {
    if (qom_paths.size() != 2) {
      throw ValidationError("--qom needs exactly two state files");
    }
    const DensityMatrix rho1 = load_density(qom_paths[0]);
    const DensityMatrix rho2 = load_density(qom_paths[1]);
    const QomResult result = qom_overlap(rho1, rho2);
    doc["mode"] = "qom";
    doc["overlap"] = result.overlap;
    doc["delta_c"] = result.delta_c;
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (dqc1_qubits > 0) {
    if (unitary_paths.size() != 1) {
      throw ValidationError("--dqc1 needs exactly one --unitary file");
    }
    const UnitaryMatrix u = load_unitary(unitary_paths[0]);
    if (u.dim() != (1 << dqc1_qubits)) {
      std::ostringstream os;
      os << "--dqc1 " << dqc1_qubits << " expects a unitary of dimension "
         << (1 << dqc1_qubits) << ", got " << u.dim();
      throw ValidationError(os.str());
    }
    const Dqc1Result result = dqc1_delta(u, bloch.p3);
    doc["mode"] = "dqc1";
    doc["qubits"] = dqc1_qubits;
    doc["p3"] = bloch.p3;
    doc["normalized_trace"] = complex_to_json(result.normalized_trace);
    doc["delta_c"] = result.delta_c;
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (system_path.empty() || unitary_paths.empty()) {
    throw ValidationError(
        "probe needs --system and at least one --unitary (or a --dqc1/--qom "
        "shortcut)");
  }
  const DensityMatrix rho_s = load_density(system_path);
  std::vector<UnitaryMatrix> unitaries;
  unitaries.reserve(unitary_paths.size());
  for (const std::string& path : unitary_paths) {
    unitaries.push_back(load_unitary(path));
  }
  doc["mode"] = "scheme";
  doc["bloch"] = json{bloch.p1, bloch.p2, bloch.p3};
  ordered_json terms = ordered_json::array();
  double cost = 0.0;
  for (size_t i = 0; i < unitaries.size(); ++i) {
    const UnitaryMatrix& u = unitaries[i];
    const ProbeCircuitResult circuit = run_probe_circuit(bloch, rho_s, u);
    for (const std::string& warning : circuit.warnings) {
      err << "warning: " << unitary_paths[i] << ": " << warning << "\n";
    }
    const double change = delta_c(bloch, rho_s, u);
    cost += change;
    ordered_json term;
    term["unitary"] = unitary_paths[i];
    term["normalized_trace"] =
        complex_to_json((rho_s.mat() * u.mat()).trace());
    term["delta_c"] = change;
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  doc["cost"] = cost;
  out << doc.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& suite, long samples, std::uint64_t seed,
               int jobs, double base, std::ostream& out) {
  std::vector<const SuiteSpec*> selected;
  for (const SuiteSpec& spec : kSuites) {
    if (suite == "all" || suite == spec.name) selected.push_back(&spec);
  }
  if (selected.empty()) {
    std::ostringstream os;
    os << "unknown suite '" << suite << "'; available:";
    for (const SuiteSpec& spec : kSuites) os << " " << spec.name;
    os << " all";
    throw ValidationError(os.str());
  }
  const SeededStream base_stream(seed);
  bool all_pass = true;
  for (const SuiteSpec* spec : selected) {
    const long n = samples > 0 ? samples : spec->default_samples;
    const SuiteOutcome outcome = run_sharded(
        n, jobs, [&](long s) { return spec->fn(s, base_stream, base); });
    const bool pass = outcome.violations == 0;
    all_pass = all_pass && pass;
    out << "suite=" << spec->name << " samples=" << n << " seed=" << seed
        << " checks=" << outcome.checks << " violations=" << outcome.violations
        << " status=" << (pass ? "pass" : "fail") << "\n";
  }
  return all_pass ? 0 : 1;
}

int run_sweep(const std::string& preset, int points, double base,
              const std::string& output, std::ostream& out) {
  if (points < 2) {
    throw ValidationError("sweep: invalid grid, need --points >= 2");
  }
  const bool as_json = output == "json";
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  if (preset == "qom-overlap") {
    csv << "overlap,delta_c\n";
    ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
    ground(0, 0) = 1.0;
    const DensityMatrix rho1(ground);
    for (int i = 0; i < points; ++i) {
      const double t = static_cast<double>(i) / (points - 1);
      ComplexMatrix other = ComplexMatrix::Zero(2, 2);
      other(0, 0) = t;
      other(1, 1) = 1.0 - t;
      const QomResult r = qom_overlap(rho1, DensityMatrix(other));
      if (as_json) {
        rows.push_back({{"overlap", r.overlap}, {"delta_c", r.delta_c}});
      } else {
        csv << format_real(r.overlap) << "," << format_real(r.delta_c) << "\n";
      }
    }
  } else if (preset == "purity") {
    csv << "p,purity,c2,c_re,c_skew,c_trace\n";
    for (int i = 0; i < points; ++i) {
      const double p = 0.5 + 0.5 * static_cast<double>(i) / (points - 1);
      ComplexMatrix m = ComplexMatrix::Zero(2, 2);
      m(0, 0) = p;
      m(1, 1) = 1.0 - p;
      const MeasureReport r = measure_report(DensityMatrix(m), base);
      if (as_json) {
        rows.push_back({{"p", p},
                        {"purity", r.purity},
                        {"c2", r.c2},
                        {"c_re", r.c_re},
                        {"c_skew", r.c_skew},
                        {"c_trace", r.c_trace}});
      } else {
        csv << format_real(p) << "," << format_real(r.purity) << ","
            << format_real(r.c2) << "," << format_real(r.c_re) << ","
            << format_real(r.c_skew) << "," << format_real(r.c_trace) << "\n";
      }
    }
  } else {
    throw ValidationError("sweep: unknown preset '" + preset +
                          "' (available: qom-overlap, purity)");
  }
  if (as_json) {
    out << rows.dump(2) << "\n";
  } else {
    out << csv.str();
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "cohere: basis-independent quantum-coherence toolkit.\n"
      "Matrix files are JSON documents {\"dim\": n, \"entries\": [[re, im], "
      "...]} in row-major order. Randomized commands default to seed 1."};
  app.name("cohere");
  app.require_subcommand(0, 1);

  // Shared option storage; each subcommand binds the flags it supports.
  std::string state_path, output = "json", objective = "l1", emit_unitary;
  std::string sweep_output = "csv";
  std::string suite, preset, system_path;
  std::vector<std::string> unitary_paths, qom_paths;
  std::vector<double> bloch{0.0, 0.0, 1.0};
  double base = 2.0, tol = 1e-10;
  int copies = 2, restarts = 16, max_iters = 2000, points = 11;
  int dqc1_qubits = 0;
  int jobs = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  long samples = 0;
  long long shots = 0;
  std::uint64_t seed = kDefaultSeed;

  const auto add_optimizer_flags = [&](CLI::App* sub) {
    sub->add_option("--restarts", restarts, "Optimizer restarts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", max_iters, "Iterations per restart")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", tol, "Objective stall threshold");
    sub->add_option("--seed", seed, "Random seed (default 1)");
  };

  CLI::App* measure_cmd =
      app.add_subcommand("measure", "Closed-form coherence report of a state");
  measure_cmd->add_option("--state", state_path, "Density matrix file")
      ->required();
  measure_cmd->add_option("--log-base", base, "Entropy log base (default 2)");
  bool with_c1 = false;
  measure_cmd->add_flag("--with-c1", with_c1,
                        "Also run the l1 basis optimizer");
  measure_cmd->add_option("--output", output, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_optimizer_flags(measure_cmd);

  CLI::App* optimize_cmd = app.add_subcommand(
      "optimize", "Maximize an l1 objective over the unitary group");
  optimize_cmd->add_option("--state", state_path, "Density matrix file")
      ->required();
  optimize_cmd
      ->add_option("--objective", objective, "l1, l1-distance or both")
      ->check(CLI::IsMember({"l1", "l1-distance", "both"}));
  optimize_cmd->add_option("--emit-unitary", emit_unitary,
                           "Write the best unitary to this file");
  add_optimizer_flags(optimize_cmd);

  CLI::App* swap_cmd = app.add_subcommand(
      "swap-test", "Simulate the controlled cyclic-shift purity circuit");
  swap_cmd->add_option("--state", state_path, "Density matrix file")
      ->required();
  swap_cmd->add_option("--copies", copies, "Number of state copies k")
      ->required()
      ->check(CLI::PositiveNumber);
  swap_cmd->add_option("--shots", shots, "Finite-shot sample count")
      ->check(CLI::NonNegativeNumber);
  swap_cmd->add_option("--seed", seed, "Random seed (default 1)");

  CLI::App* probe_cmd = app.add_subcommand(
      "probe", "Coherence cost of a probing scheme (supply the scheme's "
               "unitaries; list a gate decomposition for gate-level cost)");
  probe_cmd->add_option("--bloch", bloch,
                        "Probe Bloch vector P1,P2,P3 (default 0,0,1)")
      ->delimiter(',')
      ->expected(3);
  probe_cmd->add_option("--system", system_path, "System density matrix file");
  probe_cmd->add_option("--unitary", unitary_paths,
                        "Controlled-unitary file (repeatable)");
  CLI::Option* dqc1_opt =
      probe_cmd
          ->add_option("--dqc1", dqc1_qubits,
                       "DQC1 shortcut: qubit count of the maximally mixed "
                       "register")
          ->check(CLI::PositiveNumber);
  probe_cmd
      ->add_option("--qom", qom_paths,
                   "Overlap-measurement shortcut: two state files")
      ->expected(2)
      ->excludes(dqc1_opt);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a randomized property suite");
  {
    std::ostringstream names;
    for (const SuiteSpec& spec : kSuites) names << spec.name << ", ";
    verify_cmd
        ->add_option("--suite", suite, "One of: " + names.str() + "all")
        ->required();
  }
  verify_cmd->add_option("--samples", samples,
                         "Sample count (0 = per-suite default)");
  verify_cmd->add_option("--seed", seed, "Random seed (default 1)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--log-base", base, "Entropy log base (default 2)");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Emit plot-ready grid data");
  sweep_cmd->add_option("--preset", preset, "qom-overlap or purity")
      ->required();
  sweep_cmd->add_option("--points", points, "Grid size (default 11)");
  sweep_cmd->add_option("--log-base", base, "Entropy log base (default 2)");
  sweep_cmd->add_option("--output", sweep_output, "csv (default) or json")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(measure_cmd)) {
      return run_measure(state_path, base, with_c1, restarts, max_iters, tol,
                         seed, output, out);
    }
    if (app.got_subcommand(optimize_cmd)) {
      return run_optimize(state_path, objective, restarts, max_iters, tol,
                          seed, emit_unitary, out);
    }
    if (app.got_subcommand(swap_cmd)) {
      return run_swap_test(state_path, copies, shots, seed, out);
    }
    if (app.got_subcommand(probe_cmd)) {
      return run_probe(bloch, system_path, unitary_paths, dqc1_qubits,
                       qom_paths, out, err);
    }
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(suite, samples, seed, jobs, base, out);
    }
    if (app.got_subcommand(sweep_cmd)) {
      return run_sweep(preset, points, base, sweep_output, out);
    }
    out << app.help();
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cohere::cli
