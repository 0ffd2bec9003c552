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

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

namespace cohere {

namespace {

long pow_checked(int d, int k) {
  long m = 1;
  for (int i = 0; i < k; ++i) {
    m *= d;
    if (m > kSwapDimCap) {
      std::ostringstream os;
      os << "joint dimension " << d << "^" << k << " exceeds the cap "
         << kSwapDimCap;
      throw ValidationError(os.str());
    }
  }
  return m;
}

// perm[i] = index of |psi_k, psi_1, ..., psi_{k-1}> when i indexes
// |psi_1, ..., psi_k> with the first factor most significant.
std::vector<long> cyclic_shift_permutation(int copies, int d) {
  const long m = pow_checked(d, copies);
  const long msd = m / d;
  std::vector<long> perm(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    const long last = i % d;
    const long rest = i / d;
    perm[static_cast<size_t>(i)] = last * msd + rest;
  }
  return perm;
}

ComplexMatrix kron_power(const ComplexMatrix& m, int k) {
  ComplexMatrix out = m;
  for (int i = 1; i < k; ++i) out = kron(out, m);
  return out;
}

// Polynomial helpers below work on full coefficient arrays a_0..a_deg
// (a_deg = 1 for our monic characteristic polynomials).

void eval_poly(const std::vector<double>& a, Complex x, Complex& p,
               Complex& dp, Complex& ddp) {
  p = Complex(0.0, 0.0);
  dp = Complex(0.0, 0.0);
  ddp = Complex(0.0, 0.0);
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    ddp = ddp * x + 2.0 * dp;
    dp = dp * x + p;
    p = p * x + a[static_cast<size_t>(i)];
  }
}

// Newton iteration on p/p', which has simple roots at roots of any
// multiplicity; keeps the iterate with the smallest residual.
Complex polish_root(const std::vector<double>& a, Complex z) {
  Complex best = z;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int step = 0; step < 12; ++step) {
    Complex p, dp, ddp;
    eval_poly(a, z, p, dp, ddp);
    if (std::abs(p) < best_residual) {
      best_residual = std::abs(p);
      best = z;
    }
    const Complex denom = dp * dp - p * ddp;
    Complex w;
    if (std::abs(denom) > 1e-300) {
      w = p * dp / denom;
    } else if (std::abs(dp) > 1e-300) {
      w = p / dp;
    } else {
      break;
    }
    if (std::abs(w) < 1e-16 || std::abs(w) > 0.1) break;
    z -= w;
  }
  return best;
}

std::vector<double> derivative(const std::vector<double>& a) {
  std::vector<double> d(a.size() - 1);
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    d[i] = a[i + 1] * static_cast<double>(i + 1);
  }
  return d;
}

// True if p and its first m-1 derivatives vanish at x to machine-level
// backward error, i.e. the polynomial supports an m-fold root there.
bool supports_multiplicity(const std::vector<double>& a, double x, int m) {
  std::vector<double> current = a;
  for (int j = 0; j < m; ++j) {
    Complex p, dp, ddp;
    eval_poly(current, Complex(x, 0.0), p, dp, ddp);
    double scale = 0.0;
    double power = 1.0;
    for (double c : current) {
      scale += std::abs(c) * power;
      power *= std::abs(x);
    }
    const double noise =
        100.0 * static_cast<double>(a.size()) *
        std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
    if (std::abs(p) > noise) return false;
    if (j + 1 < m) current = derivative(current);
  }
  return true;
}

// Companion-matrix roots split as eps^(1/m) around an m-fold root, far beyond
// the 1e-6 imaginary cutoff, while their cluster mean is backward-stable.
// Merge maximal verified clusters to their mean and polish the rest.
std::vector<Complex> resolve_roots(const std::vector<double>& a,
                                   std::vector<Complex> raw) {
  std::sort(raw.begin(), raw.end(), [](const Complex& l, const Complex& r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  const int n = static_cast<int>(raw.size());
  std::vector<Complex> out;
  out.reserve(raw.size());
  int i = 0;
  while (i < n) {
    int merged = 1;
    for (int m = n - i; m >= 2; --m) {
      double spread = 0.0;
      Complex mean(0.0, 0.0);
      for (int j = i; j < i + m; ++j) {
        mean += raw[static_cast<size_t>(j)];
        spread = std::max(spread, std::abs(raw[static_cast<size_t>(j)] -
                                           raw[static_cast<size_t>(i)]));
      }
      mean /= static_cast<double>(m);
      if (spread > 0.05) continue;
      if (supports_multiplicity(a, mean.real(), m)) {
        for (int j = 0; j < m; ++j) out.emplace_back(mean.real(), 0.0);
        merged = m;
        break;
      }
    }
    if (merged == 1) {
      out.push_back(polish_root(a, raw[static_cast<size_t>(i)]));
    }
    i += merged;
  }
  return out;
}

}  // namespace

MomentVector::MomentVector(int dim, std::vector<double> moments)
    : dim_(dim), moments_(std::move(moments)) {
  if (dim_ < 1) {
    throw ValidationError("MomentVector: dimension must be >= 1");
  }
  if (moments_.empty()) {
    throw ValidationError("MomentVector: need at least one moment");
  }
  if (std::abs(moments_[0] - 1.0) > kNumericTol) {
    std::ostringstream os;
    os << "MomentVector invariant violated: p_1 = " << moments_[0]
       << " not 1 within 1e-9";
    throw ValidationError(os.str());
  }
  double lower = 1.0;
  for (size_t k = 0; k < moments_.size(); ++k) {
    const double p = moments_[k];
    if (p > 1.0 + kNumericTol || p < lower - kNumericTol) {
      std::ostringstream os;
      os << "MomentVector invariant violated: p_" << (k + 1) << " = " << p
         << " outside [1/n^" << k << ", 1]";
      throw ValidationError(os.str());
    }
    if (k > 0 && p > moments_[k - 1] + kNumericTol) {
      std::ostringstream os;
      os << "MomentVector invariant violated: p_" << (k + 1) << " = " << p
         << " exceeds p_" << k << " = " << moments_[k - 1];
      throw ValidationError(os.str());
    }
    lower /= dim_;
  }
}

UnitaryMatrix generalized_swap(int copies, int d) {
  if (copies < 1 || d < 2) {
    throw ValidationError("generalized_swap: need copies >= 1 and d >= 2");
  }
  const std::vector<long> perm = cyclic_shift_permutation(copies, d);
  const long m = static_cast<long>(perm.size());
  ComplexMatrix v = ComplexMatrix::Zero(m, m);
  for (long i = 0; i < m; ++i) {
    v(perm[static_cast<size_t>(i)], i) = Complex(1.0, 0.0);
  }
  return UnitaryMatrix(std::move(v));
}

UnitaryMatrix controlled_unitary(const UnitaryMatrix& u) {
  const int m = u.dim();
  ComplexMatrix c = ComplexMatrix::Zero(2L * m, 2L * m);
  c.topLeftCorner(m, m) = ComplexMatrix::Identity(m, m);
  c.bottomRightCorner(m, m) = u.mat();
  return UnitaryMatrix(std::move(c));
}

double swap_test_probability(const DensityMatrix& rho, int copies) {
  if (copies < 1) {
    throw ValidationError("swap_test_probability: need copies >= 1");
  }
  const int d = rho.dim();
  const std::vector<long> perm = (d >= 2 && copies >= 1)
                                     ? cyclic_shift_permutation(copies, d)
                                     : std::vector<long>{0};
  const long m = (d == 1) ? 1 : static_cast<long>(perm.size());

  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const ComplexMatrix copies_state = kron_power(rho.mat(), copies);
  const ComplexMatrix joint = kron(plus, copies_state);

  // The controlled cyclic shift is a permutation: identity on the |0> block,
  // the shift on the |1> block. Conjugation is an index relabeling.
  const auto map_index = [&](long i) {
    return (i < m) ? i : m + perm[static_cast<size_t>(i - m)];
  };
  ComplexMatrix evolved(2 * m, 2 * m);
  for (long i = 0; i < 2 * m; ++i) {
    const long pi = map_index(i);
    for (long j = 0; j < 2 * m; ++j) {
      evolved(pi, map_index(j)) = joint(i, j);
    }
  }

  const ComplexMatrix probe =
      partial_trace_raw(evolved, 2, static_cast<int>(m), Keep::A);
  // sigma_x measurement: +1 projector is |+><+|.
  const Complex p_plus =
      0.5 * (probe(0, 0) + probe(0, 1) + probe(1, 0) + probe(1, 1));
  return p_plus.real();
}

MomentVector moments_from_circuit(const DensityMatrix& rho, int k_max) {
  if (k_max < 1 || k_max > rho.dim()) {
    std::ostringstream os;
    os << "moments_from_circuit: k_max must be in [1, dim], got " << k_max
       << " for dimension " << rho.dim();
    throw ValidationError(os.str());
  }
  std::vector<double> moments(static_cast<size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    moments[static_cast<size_t>(k - 1)] =
        2.0 * swap_test_probability(rho, k) - 1.0;
  }
  return MomentVector(rho.dim(), std::move(moments));
}

ShotRecord sample_swap_test(const DensityMatrix& rho, int copies,
                            long long shots, SeededStream& stream) {
  if (shots < 1) {
    throw ValidationError("sample_swap_test: need shots >= 1");
  }
  const double p = swap_test_probability(rho, copies);
  long long plus = 0;
  for (long long s = 0; s < shots; ++s) {
    if (stream.uniform01() < p) ++plus;
  }
  return ShotRecord{shots, plus};
}

Spectrum spectrum_from_moments(const MomentVector& moments) {
  const int n = moments.dim();
  if (moments.count() != n) {
    std::ostringstream os;
    os << "spectrum_from_moments: need exactly n = " << n << " moments, got "
       << moments.count();
    throw ValidationError(os.str());
  }
  if (n > 8) {
    throw ValidationError(
        "spectrum_from_moments: supported for n <= 8 (the inversion is too "
        "ill-conditioned beyond that)");
  }
  if (n == 1) {
    return Spectrum({1.0});
  }
  const std::vector<double>& p = moments.moments();

  // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
  std::vector<double> e(static_cast<size_t>(n) + 1, 0.0);
  e[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    double sign = 1.0;
    for (int i = 1; i <= k; ++i) {
      acc += sign * e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i - 1)];
      sign = -sign;
    }
    e[static_cast<size_t>(k)] = acc / k;
  }

  // Characteristic polynomial x^n - e_1 x^(n-1) + ... + (-1)^n e_n, stored
  // as the full coefficient array a_0..a_n with a_{n-k} = (-1)^k e_k.
  std::vector<double> coeffs(static_cast<size_t>(n) + 1, 0.0);
  coeffs[static_cast<size_t>(n)] = 1.0;
  for (int k = 1; k <= n; ++k) {
    coeffs[static_cast<size_t>(n - k)] =
        ((k % 2 == 0) ? 1.0 : -1.0) * e[static_cast<size_t>(k)];
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[static_cast<size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("spectrum_from_moments: companion eigensolver failed");
  }

  std::vector<Complex> raw(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) raw[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  const std::vector<Complex> roots = resolve_roots(coeffs, std::move(raw));

  std::vector<double> values;
  values.reserve(static_cast<size_t>(n));
  double sum = 0.0;
  for (const Complex& root : roots) {
    if (std::abs(root.imag()) > 1e-6) {
      std::ostringstream os;
      os << "spectrum_from_moments: inconsistent moments, complex eigenvalue "
         << root << " (shot noise too large or invalid input)";
      throw NumericalError(os.str());
    }
    double x = root.real();
    if (x < -1e-6) {
      std::ostringstream os;
      os << "spectrum_from_moments: inconsistent moments, negative eigenvalue "
         << x << " (shot noise too large or invalid input)";
      throw NumericalError(os.str());
    }
    if (x < 0.0) x = 0.0;
    values.push_back(x);
    sum += x;
  }
  if (sum <= 0.0) {
    throw NumericalError("spectrum_from_moments: eigenvalue sum vanished");
  }
  for (double& v : values) v /= sum;
  std::sort(values.begin(), values.end(), std::greater<double>());
  return Spectrum(std::move(values));
}

MeasureReport measures_from_moments(const MomentVector& moments, double base) {
  const Spectrum spectrum = spectrum_from_moments(moments);
  MeasureReport report = report_from_spectrum(spectrum, moments.dim(), base);
  if (moments.dim() >= 2) {
    // Two-copy shortcut: c2 needs only p_2, independent of the inversion.
    const double p2 = moments.moments()[1];
    const double c2_direct = p2 - 1.0 / moments.dim();
    if (std::abs(c2_direct - report.c2) > kNumericTol) {
      std::ostringstream os;
      os << "measures_from_moments: spectral c2 " << report.c2
         << " disagrees with the p_2 shortcut " << c2_direct;
      throw NumericalError(os.str());
    }
    report.purity = p2;
    report.c2 = c2_direct;
  }
  return report;
}

}  // namespace cohere
