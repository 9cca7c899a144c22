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

// The two unitary formulations of the parity oracle, plus the query-counted
// oracle object shared by the classical and quantum solvers.
//
// Phase form (n qubits):  |x> -> (-1)^{a.x} |x>, a tensor product of I and
// sigma_z factors. Bit form (n+1 qubits): |x>|b> -> |x>|b xor a.x>.

#pragma once

#include <cstdint>

#include "spinbv/bv/bitstring.hpp"
#include "spinbv/qc/gates.hpp"
#include "spinbv/qc/state.hpp"

namespace spinbv::bv {

// Factor i is sigma_z when a_i = 1, identity otherwise.
qc::FactoredOperator build_phase_oracle(const BitString& a);

// Permutation on n+1 qubits; the ancilla is the least significant bit.
class BitOracle {
 public:
  explicit BitOracle(BitString a, int dense_limit = qc::kDefaultDenseLimit);

  int num_qubits() const { return hidden_.size() + 1; }

  // Image of a basis index under |x>|b> -> |x>|b xor a.x>.
  std::uint64_t permuted_index(std::uint64_t index) const;

  // In-place basis permutation of a dense (n+1)-qubit state.
  void apply(qc::PureState& state) const;

 private:
  BitString hidden_;
  std::uint64_t mask_;  // hidden string as an n-bit index
};

// Holds the secret string and counts every query made against it, whatever
// the formulation: one classical evaluation or one unitary application each
// cost exactly one query.
class ParityOracle {
 public:
  explicit ParityOracle(BitString hidden);

  int n() const { return hidden_.size(); }
  std::uint64_t queries() const { return queries_; }
  const BitString& hidden() const { return hidden_; }

  // f_a(x) = a.x mod 2.
  int classical_query(const BitString& x);

  // Phase-oracle application on either backend.
  void apply_phase(qc::PureState& state);
  void apply_phase(qc::ProductState& state);

  // Bit-oracle application on an (n+1)-qubit dense state.
  void apply_bit(qc::PureState& state);

 private:
  BitString hidden_;
  std::uint64_t queries_ = 0;
};

}  // namespace spinbv::bv
