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

#include "pkeet/ots.hpp"

#include <stdexcept>

#include "pkeet/sha256.hpp"

namespace pkeet::ots {

namespace {

inline std::size_t entry_offset(unsigned bit_value, std::size_t bit_index) {
  return (bit_value * kDigestBits + bit_index) * kHashSize;
}

inline unsigned digest_bit(const Digest32& d, std::size_t i) {
  return (d[i / 8] >> (7 - i % 8)) & 1;
}

}  // namespace

KeyPair kgen(Rng& rng) {
  KeyPair kp;
  kp.sk.preimages = rng.bytes(kKeyBytes);
  kp.vk.digests.resize(kKeyBytes);
  for (std::size_t e = 0; e < kKeyEntries; ++e) {
    Digest32 d = sha256(
        ByteView(kp.sk.preimages).subspan(e * kHashSize, kHashSize));
    std::copy(d.begin(), d.end(), kp.vk.digests.begin() + e * kHashSize);
  }
  return kp;
}

Signature sign(const SigningKey& sk, ByteView message) {
  if (sk.preimages.size() != kKeyBytes) {
    throw std::invalid_argument("malformed signing key");
  }
  Digest32 md = sha256(message);
  Signature sig;
  sig.preimages.resize(kSignatureBytes);
  for (std::size_t i = 0; i < kDigestBits; ++i) {
    std::size_t src = entry_offset(digest_bit(md, i), i);
    std::copy_n(sk.preimages.begin() + src, kHashSize,
                sig.preimages.begin() + i * kHashSize);
  }
  return sig;
}

bool verify(const VerifyKey& vk, ByteView message, const Signature& sig) {
  if (vk.digests.size() != kKeyBytes ||
      sig.preimages.size() != kSignatureBytes) {
    return false;
  }
  Digest32 md = sha256(message);
  for (std::size_t i = 0; i < kDigestBits; ++i) {
    Digest32 d =
        sha256(ByteView(sig.preimages).subspan(i * kHashSize, kHashSize));
    std::size_t want = entry_offset(digest_bit(md, i), i);
    if (!std::equal(d.begin(), d.end(), vk.digests.begin() + want)) {
      return false;
    }
  }
  return true;
}

}  // namespace pkeet::ots
