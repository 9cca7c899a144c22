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

#include "spinbv/qc/state.hpp"

#include <cmath>
#include <stdexcept>

namespace spinbv::qc {

namespace {

void check_qubit_count(int num_qubits, int dense_limit) {
  if (num_qubits < 1) {
    throw std::invalid_argument("PureState needs at least one qubit");
  }
  if (num_qubits > dense_limit) {
    throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                " exceeds the dense backend limit of " +
                                std::to_string(dense_limit));
  }
}

}  // namespace

PureState::PureState(int num_qubits, int dense_limit) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits, dense_limit);
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
  amps_(0) = 1.0;
}

PureState PureState::basis(int num_qubits, std::uint64_t index,
                           int dense_limit) {
  PureState state(num_qubits, dense_limit);
  if (index >= state.dim()) {
    throw std::out_of_range("basis index out of range");
  }
  state.amps_(0) = 0.0;
  state.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return state;
}

PureState PureState::from_amplitudes(int num_qubits, Eigen::VectorXcd amps,
                                     int dense_limit) {
  check_qubit_count(num_qubits, dense_limit);
  if (amps.size() != (Eigen::Index{1} << num_qubits)) {
    throw std::invalid_argument("amplitude vector length is not 2^n");
  }
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (!std::isfinite(amps(i).real()) || !std::isfinite(amps(i).imag())) {
      throw std::invalid_argument("amplitude is not finite");
    }
  }
  const double norm2 = amps.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
  return PureState(num_qubits, std::move(amps));
}

ProductState::ProductState(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("ProductState needs at least one qubit");
  }
  factors_.assign(num_qubits, Eigen::Vector2cd(1.0, 0.0));
}

ProductState ProductState::from_factors(std::vector<Eigen::Vector2cd> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("ProductState needs at least one factor");
  }
  for (const auto& f : factors) {
    if (std::abs(f.squaredNorm() - 1.0) > 1e-12) {
      throw std::invalid_argument("product factor is not unit norm");
    }
  }
  ProductState state;
  state.factors_ = std::move(factors);
  return state;
}

PureState expand(const ProductState& state, int dense_limit) {
  const int n = state.num_qubits();
  if (n > dense_limit) {
    throw std::invalid_argument("product state too large for dense expansion");
  }
  // Grow least-significant-qubit last so qubit 0 ends up most significant.
  Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(1);
  for (int q = 0; q < n; ++q) {
    const Eigen::Vector2cd& f = state.factor(q);
    Eigen::VectorXcd next(amps.size() * 2);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      next(2 * i) = amps(i) * f(0);
      next(2 * i + 1) = amps(i) * f(1);
    }
    amps.swap(next);
  }
  return PureState::from_amplitudes(n, std::move(amps), dense_limit);
}

}  // namespace spinbv::qc
