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

// Pure-state backends for entanglement-free circuit simulation.
//
// Basis index convention, used everywhere in this library: qubit 0 is the
// MOST significant bit of the basis index, so for a two-qubit register the
// index 2 (binary 10) is the basis state |10> with qubit 0 in |1>.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinbv::qc {

using Amplitude = std::complex<double>;

// Guard for dense 2^n storage; 2^24 amplitudes is the default ceiling.
inline constexpr int kDefaultDenseLimit = 24;

// Norm tolerance accepted when constructing states from raw amplitudes.
inline constexpr double kNormTolerance = 1e-10;

// Dense 2^n state vector.
class PureState {
 public:
  // |0...0> on n qubits.
  explicit PureState(int num_qubits, int dense_limit = kDefaultDenseLimit);

  // Basis state |index>.
  static PureState basis(int num_qubits, std::uint64_t index,
                         int dense_limit = kDefaultDenseLimit);

  // Takes ownership of an amplitude vector; must have length 2^n and unit
  // norm within kNormTolerance, with every entry finite.
  static PureState from_amplitudes(int num_qubits, Eigen::VectorXcd amps,
                                   int dense_limit = kDefaultDenseLimit);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }

  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  Amplitude amplitude(std::uint64_t index) const {
    return amps_(static_cast<Eigen::Index>(index));
  }

  double norm() const { return amps_.norm(); }

  // Bit of `qubit` in basis index `x` under the MSB-first convention.
  int bit_of(std::uint64_t x, int qubit) const {
    return static_cast<int>((x >> (num_qubits_ - 1 - qubit)) & 1u);
  }

 private:
  PureState(int num_qubits, Eigen::VectorXcd amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  int num_qubits_;
  Eigen::VectorXcd amps_;
};

// List of n single-qubit states; the backend of choice when the circuit is
// known to stay separable. Memory and gate cost are O(n), not O(2^n).
class ProductState {
 public:
  // |0>^n.
  explicit ProductState(int num_qubits);

  // Each factor must have unit norm within 1e-12.
  static ProductState from_factors(std::vector<Eigen::Vector2cd> factors);

  int num_qubits() const { return static_cast<int>(factors_.size()); }
  const Eigen::Vector2cd& factor(int qubit) const { return factors_.at(qubit); }
  Eigen::Vector2cd& factor(int qubit) { return factors_.at(qubit); }
  const std::vector<Eigen::Vector2cd>& factors() const { return factors_; }

 private:
  ProductState() = default;
  std::vector<Eigen::Vector2cd> factors_;
};

// Dense expansion of a product state: the amplitude at index x is the
// product of the factor amplitudes selected by the bits of x.
PureState expand(const ProductState& state,
                 int dense_limit = kDefaultDenseLimit);

}  // namespace spinbv::qc
