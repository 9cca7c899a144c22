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

#include "spinbv/qc/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace spinbv::qc {

QubitOperator hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  QubitOperator h;
  h << s, s, s, -s;
  return h;
}

QubitOperator pauli_z() {
  QubitOperator z;
  z << 1.0, 0.0, 0.0, -1.0;
  return z;
}

QubitOperator identity_gate() { return QubitOperator::Identity(); }

FactoredOperator FactoredOperator::layer(int num_qubits,
                                         const QubitOperator& gate) {
  if (num_qubits < 1) {
    throw std::invalid_argument("operator needs at least one factor");
  }
  FactoredOperator op;
  op.factors.assign(num_qubits, gate);
  return op;
}

double FactoredOperator::unitarity_defect() const {
  double defect = 0.0;
  for (const auto& u : factors) {
    defect = std::max(
        defect, (u * u.adjoint() - QubitOperator::Identity()).cwiseAbs().maxCoeff());
  }
  return defect;
}

PureState apply_single(const PureState& state, int qubit,
                       const QubitOperator& gate) {
  const int n = state.num_qubits();
  if (qubit < 0 || qubit >= n) {
    throw std::out_of_range("qubit index out of range");
  }
  PureState out = state;
  Eigen::VectorXcd& amps = out.amplitudes();
  const std::uint64_t dim = out.dim();
  const std::uint64_t stride = std::uint64_t{1} << (n - 1 - qubit);
  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t i = base; i < base + stride; ++i) {
      const Amplitude a0 = amps(static_cast<Eigen::Index>(i));
      const Amplitude a1 = amps(static_cast<Eigen::Index>(i + stride));
      amps(static_cast<Eigen::Index>(i)) = gate(0, 0) * a0 + gate(0, 1) * a1;
      amps(static_cast<Eigen::Index>(i + stride)) =
          gate(1, 0) * a0 + gate(1, 1) * a1;
    }
  }
  return out;
}

PureState apply_factored(const PureState& state, const FactoredOperator& op) {
  const int n = state.num_qubits();
  if (op.size() != n) {
    throw std::invalid_argument("factor count does not match qubit count");
  }
  PureState out = state;
  Eigen::VectorXcd& amps = out.amplitudes();
  const std::uint64_t dim = out.dim();
  for (int q = 0; q < n; ++q) {
    const QubitOperator& gate = op.factors[q];
    const std::uint64_t stride = std::uint64_t{1} << (n - 1 - q);
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
      for (std::uint64_t i = base; i < base + stride; ++i) {
        const Amplitude a0 = amps(static_cast<Eigen::Index>(i));
        const Amplitude a1 = amps(static_cast<Eigen::Index>(i + stride));
        amps(static_cast<Eigen::Index>(i)) = gate(0, 0) * a0 + gate(0, 1) * a1;
        amps(static_cast<Eigen::Index>(i + stride)) =
            gate(1, 0) * a0 + gate(1, 1) * a1;
      }
    }
  }
  return out;
}

ProductState apply_factored(const ProductState& state,
                            const FactoredOperator& op) {
  const int n = state.num_qubits();
  if (op.size() != n) {
    throw std::invalid_argument("factor count does not match qubit count");
  }
  std::vector<Eigen::Vector2cd> factors;
  factors.reserve(n);
  for (int q = 0; q < n; ++q) {
    factors.push_back(op.factors[q] * state.factor(q));
  }
  return ProductState::from_factors(std::move(factors));
}

}  // namespace spinbv::qc
