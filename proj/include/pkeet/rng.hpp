// Copyright 2026 The pkeet Authors
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

#ifndef PKEET_RNG_HPP_
#define PKEET_RNG_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>

#include "pkeet/bytes.hpp"

namespace pkeet {

// Deterministic byte stream: key = SHA-256("PKEET/RNG:" || seed), block i =
// SHA-256(key || BE64(i)).  Seeded instances reproduce runs exactly; the
// entropy-backed constructor keys from the OS.
class Rng {
 public:
  static Rng from_entropy();
  static Rng from_seed(std::uint64_t seed);
  static Rng from_seed(ByteView seed);

  void fill(std::span<std::uint8_t> out);
  Bytes bytes(std::size_t n);
  std::uint64_t next_u64();
  // Uniform value in [0, bound) by rejection sampling; bound must be > 0.
  mpz_class below(const mpz_class& bound);

 private:
  explicit Rng(const std::array<std::uint8_t, 32>& key) : key_(key) {}

  void refill();

  std::array<std::uint8_t, 32> key_;
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t pos_ = 32;
};

}  // namespace pkeet

#endif  // PKEET_RNG_HPP_
