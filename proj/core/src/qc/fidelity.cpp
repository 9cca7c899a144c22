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

#include "spinbv/qc/fidelity.hpp"

#include <stdexcept>

namespace spinbv::qc {

double fidelity_up_to_global_phase(const Eigen::MatrixXcd& u,
                                   const Eigen::MatrixXcd& v) {
  if (u.rows() != u.cols() || v.rows() != v.cols()) {
    throw std::invalid_argument("fidelity requires square matrices");
  }
  if (u.rows() != v.rows()) {
    throw std::invalid_argument("fidelity requires equal dimensions");
  }
  const std::complex<double> overlap = (u.adjoint() * v).trace();
  return std::abs(overlap) / static_cast<double>(u.rows());
}

}  // namespace spinbv::qc
