// Copyright 2026 The spinbv Authors.
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

#include "spinbv/qc/separability.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinbv::qc {

namespace {

// 2x2 reduced density matrix of one qubit: rho(s,t) = sum over the other
// bits of amp(s,rest) * conj(amp(t,rest)).
Eigen::Matrix2cd reduced_density(const PureState& state, int qubit) {
  const int n = state.num_qubits();
  if (qubit < 0 || qubit >= n) {
    throw std::out_of_range("qubit index out of range");
  }
  const Eigen::VectorXcd& amps = state.amplitudes();
  const std::uint64_t dim = state.dim();
  const std::uint64_t stride = std::uint64_t{1} << (n - 1 - qubit);
  double p00 = 0.0;
  double p11 = 0.0;
  Amplitude coh(0.0, 0.0);
  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t i = base; i < base + stride; ++i) {
      const Amplitude a0 = amps(static_cast<Eigen::Index>(i));
      const Amplitude a1 = amps(static_cast<Eigen::Index>(i + stride));
      p00 += std::norm(a0);
      p11 += std::norm(a1);
      coh += a0 * std::conj(a1);
    }
  }
  Eigen::Matrix2cd rho;
  rho << p00, coh, std::conj(coh), p11;
  return rho;
}

// Dominant eigenvector of a 2x2 Hermitian matrix, phase-normalized so the
// largest-magnitude component is real and non-negative.
Eigen::Vector2cd dominant_eigenvector(const Eigen::Matrix2cd& rho) {
  const double a = rho(0, 0).real();
  const double c = rho(1, 1).real();
  const Amplitude b = rho(0, 1);
  const double mid = 0.5 * (a + c);
  const double rad = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
  const double lambda = mid + rad;
  Eigen::Vector2cd v;
  if (std::abs(b) > 1e-15) {
    v << b, Amplitude(lambda - a, 0.0);
  } else {
    v = (a >= c) ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
  }
  v.normalize();
  const int lead = (std::abs(v(0)) >= std::abs(v(1))) ? 0 : 1;
  if (std::abs(v(lead)) > 0.0) {
    v *= std::conj(v(lead)) / std::abs(v(lead));
  }
  return v;
}

}  // namespace

double reduced_purity(const PureState& state, int qubit) {
  const Eigen::Matrix2cd rho = reduced_density(state, qubit);
  const double p00 = rho(0, 0).real();
  const double p11 = rho(1, 1).real();
  return p00 * p00 + p11 * p11 + 2.0 * std::norm(rho(0, 1));
}

double max_impurity(const PureState& state) {
  double worst = 0.0;
  for (int q = 0; q < state.num_qubits(); ++q) {
    worst = std::max(worst, 1.0 - reduced_purity(state, q));
  }
  return worst;
}

SeparabilityResult is_fully_separable(const PureState& state, double tol) {
  SeparabilityResult result;
  result.min_purity = 1.0;
  const int n = state.num_qubits();
  std::vector<Eigen::Matrix2cd> reduced;
  reduced.reserve(n);
  for (int q = 0; q < n; ++q) {
    reduced.push_back(reduced_density(state, q));
    const double p00 = reduced.back()(0, 0).real();
    const double p11 = reduced.back()(1, 1).real();
    const double purity = p00 * p00 + p11 * p11 + 2.0 * std::norm(reduced.back()(0, 1));
    result.min_purity = std::min(result.min_purity, purity);
  }
  result.separable = result.min_purity >= 1.0 - tol;
  if (!result.separable) {
    return result;
  }
  std::vector<Eigen::Vector2cd> factors;
  factors.reserve(n);
  for (const auto& rho : reduced) {
    factors.push_back(dominant_eigenvector(rho));
  }
  result.factors = ProductState::from_factors(std::move(factors));
  return result;
}

}  // namespace spinbv::qc
