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

// Single-qubit gates and tensor-factored operator application. Factored
// operators are the only multi-qubit operations this library needs: every
// circuit it simulates is a tensor product of local gates.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spinbv/qc/state.hpp"

namespace spinbv::qc {

using QubitOperator = Eigen::Matrix2cd;

QubitOperator hadamard();
QubitOperator pauli_z();
QubitOperator identity_gate();

// U^0 (x) U^1 (x) ... (x) U^{n-1}, stored as its n factors. Never
// materialized as a 2^n x 2^n matrix.
struct FactoredOperator {
  std::vector<QubitOperator> factors;

  int size() const { return static_cast<int>(factors.size()); }

  // n copies of the same gate, e.g. a Hadamard layer.
  static FactoredOperator layer(int num_qubits, const QubitOperator& gate);

  // Max deviation of U^k (U^k)^dagger from the identity over all factors.
  double unitarity_defect() const;
};

// Applies one 2x2 gate to `qubit` of a dense state by bit-indexed sweeps.
PureState apply_single(const PureState& state, int qubit,
                       const QubitOperator& gate);

// Applies a factored operator; throws std::invalid_argument when the factor
// count does not match the qubit count.
PureState apply_factored(const PureState& state, const FactoredOperator& op);
ProductState apply_factored(const ProductState& state,
                            const FactoredOperator& op);

}  // namespace spinbv::qc
