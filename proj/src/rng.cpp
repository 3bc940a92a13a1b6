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

#include "pkeet/rng.hpp"

#include <openssl/rand.h>

#include <stdexcept>

#include "pkeet/sha256.hpp"

namespace pkeet {

namespace {
constexpr std::string_view kKeyPrefix = "PKEET/RNG:";
}

Rng Rng::from_entropy() {
  std::array<std::uint8_t, 32> seed{};
  if (RAND_bytes(seed.data(), seed.size()) != 1) {
    throw std::runtime_error("OS entropy unavailable");
  }
  return from_seed(ByteView(seed));
}

Rng Rng::from_seed(std::uint64_t seed) {
  Bytes be;
  append_u64be(be, seed);
  return from_seed(ByteView(be));
}

Rng Rng::from_seed(ByteView seed) {
  return Rng(sha256({as_bytes(kKeyPrefix), seed}));
}

void Rng::refill() {
  Bytes input(key_.begin(), key_.end());
  append_u64be(input, counter_++);
  block_ = sha256(ByteView(input));
  pos_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
  for (std::uint8_t& b : out) {
    if (pos_ == block_.size()) refill();
    b = block_[pos_++];
  }
}

Bytes Rng::bytes(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

std::uint64_t Rng::next_u64() {
  std::array<std::uint8_t, 8> buf{};
  fill(buf);
  std::uint64_t v = 0;
  for (std::uint8_t b : buf) v = (v << 8) | b;
  return v;
}

mpz_class Rng::below(const mpz_class& bound) {
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t nbytes = (bits + 7) / 8;
  const unsigned top_excess = static_cast<unsigned>(nbytes * 8 - bits);
  // Draw `bits` random bits and reject values >= bound; each draw succeeds
  // with probability > 1/2.
  while (true) {
    Bytes buf = bytes(nbytes);
    buf[0] &= static_cast<std::uint8_t>(0xff >> top_excess);
    mpz_class v;
    mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
    if (v < bound) return v;
  }
}

}  // namespace pkeet
