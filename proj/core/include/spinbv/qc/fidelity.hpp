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

#pragma once

#include <Eigen/Dense>

namespace spinbv::qc {

// |Tr(U^dagger V)| / d for two d x d matrices. Equals 1 exactly when
// V = e^{i phi} U, which is the right equivalence for compiled gates:
// global phases are not observable.
double fidelity_up_to_global_phase(const Eigen::MatrixXcd& u,
                                   const Eigen::MatrixXcd& v);

}  // namespace spinbv::qc
