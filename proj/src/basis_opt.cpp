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

#include <cmath>
#include <sstream>
#include <utility>

namespace cohere {

namespace {

ComplexMatrix hermitian_from_params(const std::vector<double>& theta, int n) {
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = Complex(theta[static_cast<size_t>(i)], 0.0);
  }
  size_t p = static_cast<size_t>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex v(theta[p], theta[p + 1]);
      h(i, j) = v;
      h(j, i) = std::conj(v);
      p += 2;
    }
  }
  return h;
}

UnitaryMatrix exp_i_hermitian(const ComplexMatrix& h) {
  const EighResult eg = eigh(h);
  const int n = static_cast<int>(h.rows());
  ComplexVector phases(n);
  for (int i = 0; i < n; ++i) {
    const double l = eg.eigenvalues(i);
    phases(i) = Complex(std::cos(l), std::sin(l));
  }
  const ComplexMatrix& v = eg.eigenvectors.mat();
  return UnitaryMatrix(v * phases.asDiagonal() * v.adjoint());
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

struct RestartOutcome {
  double value = 0.0;
  std::vector<double> theta;
  int iterations = 0;
  bool converged = false;
};

// Finite-difference gradient ascent with backtracking line search on the
// Hermitian-exponential chart. Only improving steps are accepted, so the
// objective trace is monotone non-decreasing.
RestartOutcome ascend(const std::function<double(const std::vector<double>&)>& f,
                      std::vector<double> theta, const OptimizerConfig& cfg) {
  RestartOutcome out;
  out.theta = theta;
  double value = f(theta);
  double step = cfg.step_init;
  const size_t dim = theta.size();
  std::vector<double> grad(dim, 0.0);
  std::vector<double> trial(dim, 0.0);

  int iter = 0;
  for (; iter < cfg.max_iters; ++iter) {
    double grad_sq = 0.0;
    for (size_t i = 0; i < dim; ++i) {
      const double saved = theta[i];
      theta[i] = saved + cfg.fd_step;
      grad[i] = (f(theta) - value) / cfg.fd_step;
      theta[i] = saved;
      grad_sq += grad[i] * grad[i];
    }
    if (grad_sq == 0.0) {
      out.converged = true;
      break;
    }

    double alpha = step;
    double new_value = value;
    bool accepted = false;
    while (alpha > 1e-14) {
      for (size_t i = 0; i < dim; ++i) trial[i] = theta[i] + alpha * grad[i];
      new_value = f(trial);
      if (new_value > value + 1e-4 * alpha * grad_sq) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    const double gain = new_value - value;
    theta = trial;
    value = new_value;
    step = std::min(alpha * 2.0, 10.0 * cfg.step_init);
    if (gain < cfg.tol) {
      ++iter;
      out.converged = true;
      break;
    }
  }
  out.value = value;
  out.theta = theta;
  out.iterations = iter;
  return out;
}

double eval_objective(const DensityMatrix& rho,
                      const std::function<double(const ComplexMatrix&)>& obj,
                      const std::vector<double>& theta) {
  const UnitaryMatrix u = unitary_from_params(theta);
  return obj(u.mat() * rho.mat() * u.mat().adjoint());
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw ValidationError("OptimizerConfig: restarts must be >= 1");
  if (max_iters < 1) throw ValidationError("OptimizerConfig: max_iters must be >= 1");
  if (!(tol > 0.0)) throw ValidationError("OptimizerConfig: tol must be > 0");
  if (!(step_init > 0.0)) throw ValidationError("OptimizerConfig: step_init must be > 0");
  if (!(fd_step > 0.0)) throw ValidationError("OptimizerConfig: fd_step must be > 0");
}

UnitaryMatrix unitary_from_params(const std::vector<double>& theta) {
  const int n = static_cast<int>(std::llround(std::sqrt(
      static_cast<double>(theta.size()))));
  if (n < 1 || static_cast<size_t>(n) * static_cast<size_t>(n) != theta.size()) {
    std::ostringstream os;
    os << "unitary_from_params: parameter count " << theta.size()
       << " is not a perfect square";
    throw ValidationError(os.str());
  }
  return exp_i_hermitian(hermitian_from_params(theta, n));
}

std::vector<double> params_from_hermitian(const ComplexMatrix& hermitian) {
  const int n = static_cast<int>(hermitian.rows());
  if (n < 1 || hermitian.cols() != n ||
      max_abs(hermitian - hermitian.adjoint()) > 1e-8) {
    throw ValidationError("params_from_hermitian: input must be Hermitian");
  }
  std::vector<double> theta(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    theta[static_cast<size_t>(i)] = hermitian(i, i).real();
  }
  size_t p = static_cast<size_t>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      theta[p] = hermitian(i, j).real();
      theta[p + 1] = hermitian(i, j).imag();
      p += 2;
    }
  }
  return theta;
}

ComplexMatrix hermitian_log(const UnitaryMatrix& u) {
  // Schur form of a normal matrix is diagonal with orthonormal Q, which is
  // what keeps H Hermitian even for degenerate eigenphases.
  Eigen::ComplexSchur<ComplexMatrix> schur(u.mat());
  if (schur.info() != Eigen::Success) {
    throw NumericalError("hermitian_log: Schur decomposition failed");
  }
  const int n = u.dim();
  RealVector phases(n);
  for (int i = 0; i < n; ++i) {
    phases(i) = std::arg(schur.matrixT()(i, i));
  }
  const ComplexMatrix& q = schur.matrixU();
  ComplexMatrix h = q * phases.asDiagonal() * q.adjoint();
  return ((h + h.adjoint()) * 0.5).eval();
}

OptimizationResult maximize_unitary_objective(
    const DensityMatrix& rho,
    const std::function<double(const ComplexMatrix&)>& objective,
    const OptimizerConfig& cfg) {
  cfg.validate();
  const auto f = [&](const std::vector<double>& theta) {
    return eval_objective(rho, objective, theta);
  };

  OptimizationResult best{0.0, UnitaryMatrix(ComplexMatrix::Identity(
                                   rho.dim(), rho.dim())),
                          0, false};
  bool have_best = false;
  int total_iters = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> theta0;
    if (r == 0) {
      theta0 = params_from_hermitian(hermitian_log(uniformizing_unitary(rho)));
    } else {
      SeededStream sub = cfg.stream.split(static_cast<std::uint64_t>(r));
      theta0 = params_from_hermitian(hermitian_log(haar_unitary(rho.dim(), sub)));
    }
    RestartOutcome outcome = ascend(f, std::move(theta0), cfg);
    total_iters += outcome.iterations;
    // Lowest restart index wins ties.
    if (!have_best || outcome.value > best.value) {
      best.value = outcome.value;
      best.unitary = unitary_from_params(outcome.theta);
      best.converged = outcome.converged;
      have_best = true;
    }
  }
  best.iterations = total_iters;
  return best;
}

OptimizationResult maximize_over_basis(const DensityMatrix& rho,
                                       BasisObjective objective,
                                       const OptimizerConfig& cfg) {
  const int n = rho.dim();
  const double uniform = 1.0 / n;
  std::function<double(const ComplexMatrix&)> obj;
  if (objective == BasisObjective::kL1) {
    obj = [n](const ComplexMatrix& rotated) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) sum += std::abs(rotated(i, j));
      return sum;
    };
  } else {
    obj = [n, uniform](const ComplexMatrix& rotated) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          sum += std::abs(rotated(i, j) -
                          (i == j ? Complex(uniform, 0.0) : Complex(0.0, 0.0)));
      return sum;
    };
  }
  return maximize_unitary_objective(rho, obj, cfg);
}

double c1(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  return maximize_over_basis(rho, BasisObjective::kL1, cfg).value;
}

ClosedFormValidation validate_closed_forms(const DensityMatrix& rho,
                                           int n_samples,
                                           const OptimizerConfig& cfg,
                                           double base) {
  cfg.validate();
  if (n_samples < 1) {
    throw ValidationError("validate_closed_forms: need n_samples >= 1");
  }
  const int n = rho.dim();
  ClosedFormValidation v;
  v.samples = n_samples;
  v.closed_l2 = c2(rho);
  v.closed_re = c_re(rho, base);

  const UnitaryMatrix uniformizer = uniformizing_unitary(rho);
  v.uniformizer_l2 = basis_coherence_l2(rho, uniformizer);
  v.uniformizer_re = basis_coherence_re(rho, uniformizer, base);
  v.best_l2 = v.uniformizer_l2;
  v.best_re = v.uniformizer_re;

  const auto check = [&](double value, double closed, const char* name,
                         const UnitaryMatrix& witness) {
    if (value > closed + kNumericTol) {
      std::ostringstream os;
      os << "validate_closed_forms: sampled " << name << " value " << value
         << " exceeds closed form " << closed << "; witness unitary:\n"
         << format_matrix(witness.mat());
      throw ValidationError(os.str());
    }
  };

  SeededStream sampler = cfg.stream.split(0x5A);
  for (int s = 0; s < n_samples; ++s) {
    const UnitaryMatrix u = haar_unitary(n, sampler);
    const double l2 = basis_coherence_l2(rho, u);
    const double re = basis_coherence_re(rho, u, base);
    check(l2, v.closed_l2, "l2", u);
    check(re, v.closed_re, "relative-entropy", u);
    v.best_l2 = std::max(v.best_l2, l2);
    v.best_re = std::max(v.best_re, re);
  }

  const OptimizationResult opt_l2 = maximize_unitary_objective(
      rho,
      [n](const ComplexMatrix& rotated) {
        double diag_sq = 0.0, total_sq = 0.0;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) total_sq += std::norm(rotated(i, j));
          diag_sq += std::norm(rotated(i, i));
        }
        return total_sq - diag_sq;
      },
      cfg);
  check(opt_l2.value, v.closed_l2, "optimized l2", opt_l2.unitary);
  v.best_l2 = std::max(v.best_l2, opt_l2.value);

  const double s_rho = von_neumann_entropy(rho, base);
  const OptimizationResult opt_re = maximize_unitary_objective(
      rho,
      [n, base, s_rho](const ComplexMatrix& rotated) {
        double s_diag = 0.0;
        for (int i = 0; i < n; ++i) {
          const double p = std::max(0.0, rotated(i, i).real());
          if (p > 0.0) s_diag -= p * std::log(p);
        }
        return s_diag / std::log(base) - s_rho;
      },
      cfg);
  check(opt_re.value, v.closed_re, "optimized relative-entropy",
        opt_re.unitary);
  v.best_re = std::max(v.best_re, opt_re.value);

  const auto check_attained = [&](double attained, double closed,
                                  const char* name) {
    if (std::abs(attained - closed) > kNumericTol) {
      std::ostringstream os;
      os << "validate_closed_forms: uniformizing unitary misses the " << name
         << " closed form by " << std::abs(attained - closed);
      throw ValidationError(os.str());
    }
  };
  check_attained(v.uniformizer_l2, v.closed_l2, "l2");
  check_attained(v.uniformizer_re, v.closed_re, "relative-entropy");
  return v;
}

MeasureReport measure_report_with_c1(const DensityMatrix& rho, double base,
                                     const OptimizerConfig& cfg) {
  MeasureReport report = measure_report(rho, base);
  report.c1 = c1(rho, cfg);
  return report;
}

}  // namespace cohere
