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

#include "spinbv/qc/measure.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace spinbv::qc {

namespace {

std::string index_to_bits(std::uint64_t index, int width) {
  std::string bits(width, '0');
  for (int q = 0; q < width; ++q) {
    if ((index >> (width - 1 - q)) & 1u) {
      bits[q] = '1';
    }
  }
  return bits;
}

Measurement sample_distribution(const std::vector<double>& prob, int width,
                                std::uint64_t seed) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < prob.size(); ++i) {
    if (prob[i] > prob[best]) {
      best = i;
    }
  }
  if (prob[best] >= kCertaintyThreshold) {
    return {index_to_bits(best, width), true};
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double r = uniform(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < prob.size(); ++i) {
    acc += prob[i];
    if (r < acc) {
      return {index_to_bits(i, width), false};
    }
  }
  return {index_to_bits(prob.size() - 1, width), false};
}

}  // namespace

Measurement measure_all(const PureState& state, std::uint64_t seed) {
  return measure_prefix(state, state.num_qubits(), seed);
}

Measurement measure_prefix(const PureState& state, int prefix_len,
                           std::uint64_t seed) {
  const int n = state.num_qubits();
  if (prefix_len < 1 || prefix_len > n) {
    throw std::out_of_range("prefix length out of range");
  }
  const int rest = n - prefix_len;
  std::vector<double> prob(std::size_t{1} << prefix_len, 0.0);
  const Eigen::VectorXcd& amps = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    prob[i >> rest] += std::norm(amps(static_cast<Eigen::Index>(i)));
  }
  return sample_distribution(prob, prefix_len, seed);
}

Measurement measure_all(const ProductState& state, std::uint64_t seed) {
  const int n = state.num_qubits();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::string bits(n, '0');
  std::string top(n, '0');
  double top_prob = 1.0;
  for (int q = 0; q < n; ++q) {
    const double p1 = std::norm(state.factor(q)(1));
    const double p0 = std::norm(state.factor(q)(0));
    top[q] = (p1 > p0) ? '1' : '0';
    top_prob *= std::max(p0, p1);
    bits[q] = (uniform(rng) < p1) ? '1' : '0';
  }
  if (top_prob >= kCertaintyThreshold) {
    return {top, true};
  }
  return {bits, false};
}

}  // namespace spinbv::qc
