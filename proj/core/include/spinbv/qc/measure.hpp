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

#include <cstdint>
#include <string>

#include "spinbv/qc/state.hpp"

namespace spinbv::qc {

// A basis string drawn with probability >= this is reported as certain,
// i.e. algorithmically deterministic rather than a lucky sample.
inline constexpr double kCertaintyThreshold = 1.0 - 1e-9;

struct Measurement {
  std::string bits;     // '0'/'1' characters, qubit 0 first
  bool certain = false;  // one outcome carries probability >= threshold
};

// Samples a full basis string from |amp|^2. Deterministic for a given seed.
// When one outcome dominates (probability >= kCertaintyThreshold) that
// string is returned directly with the certainty flag set.
Measurement measure_all(const PureState& state, std::uint64_t seed);
Measurement measure_all(const ProductState& state, std::uint64_t seed);

// Measures only the first `prefix_len` qubits by marginalizing over the
// rest. Used when trailing work qubits stay in superposition.
Measurement measure_prefix(const PureState& state, int prefix_len,
                           std::uint64_t seed);

}  // namespace spinbv::qc
