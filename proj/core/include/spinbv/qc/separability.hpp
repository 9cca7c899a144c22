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

// Separability diagnostics for pure states. A pure state is a full tensor
// product of single-qubit states exactly when every single-qubit reduced
// density matrix is pure, so per-qubit reduced purity is both the detector
// and, via its dominant eigenvectors, the factor extractor.

#pragma once

#include <optional>

#include "spinbv/qc/state.hpp"

namespace spinbv::qc {

inline constexpr double kDefaultSeparabilityTol = 1e-10;

// Tr(rho_k^2) of the single-qubit reduced density matrix of `qubit`.
// Lies in [0.5, 1] for any normalized state with two or more qubits.
double reduced_purity(const PureState& state, int qubit);

// Max over qubits of (1 - reduced_purity); 0 for a fully separable state.
double max_impurity(const PureState& state);

struct SeparabilityResult {
  bool separable = false;
  double min_purity = 0.0;
  // Present iff separable: per-qubit factors whose expansion matches the
  // state up to a global phase within the requested tolerance. Each factor
  // is phase-normalized so its largest-magnitude component is real >= 0.
  std::optional<ProductState> factors;
};

SeparabilityResult is_fully_separable(const PureState& state,
                                      double tol = kDefaultSeparabilityTol);

}  // namespace spinbv::qc
