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
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace spinbv::bv {

// Fixed-length binary string; bit 0 corresponds to qubit 0 (the most
// significant bit of a basis index).
class BitString {
 public:
  explicit BitString(std::string_view text);

  static BitString zeros(int length);
  static BitString unit(int length, int position);  // single 1 at position
  static BitString random(int length, std::mt19937_64& rng);
  static BitString from_index(std::uint64_t index, int length);

  int size() const { return static_cast<int>(bits_.size()); }
  int bit(int i) const { return bits_.at(i); }
  void set_bit(int i, int value) { bits_.at(i) = value ? 1 : 0; }

  // Basis index with bit 0 most significant; requires size <= 63.
  std::uint64_t as_index() const;

  std::string str() const;

  bool operator==(const BitString& other) const { return bits_ == other.bits_; }
  bool operator!=(const BitString& other) const { return !(*this == other); }

 private:
  explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  std::vector<std::uint8_t> bits_;
};

// a . x mod 2, the parity of the bits common to both strings. Throws on
// length mismatch.
int dot_mod2(const BitString& a, const BitString& x);

}  // namespace spinbv::bv
