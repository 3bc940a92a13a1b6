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

#ifndef PKEET_OTS_HPP_
#define PKEET_OTS_HPP_

#include "pkeet/bytes.hpp"
#include "pkeet/rng.hpp"

namespace pkeet::ots {

// Lamport one-time signature over the SHA-256 digest of the message.  Bits
// of the digest are indexed MSB-first: bit i of digest d is
// (d[i/8] >> (7 - i%8)) & 1.

inline constexpr std::size_t kDigestBits = 256;
inline constexpr std::size_t kHashSize = 32;
// Keys hold one 32-byte entry per (bit value, bit index) pair, laid out as
// entry[b][i] at offset (b * kDigestBits + i) * kHashSize.
inline constexpr std::size_t kKeyEntries = 2 * kDigestBits;
inline constexpr std::size_t kKeyBytes = kKeyEntries * kHashSize;    // 16384
inline constexpr std::size_t kSignatureBytes = kDigestBits * kHashSize;  // 8192

struct SigningKey {
  Bytes preimages;  // kKeyBytes of uniformly random secrets
  bool operator==(const SigningKey&) const = default;
};

struct VerifyKey {
  Bytes digests;  // kKeyBytes: SHA-256 of each signing-key entry
  bool operator==(const VerifyKey&) const = default;
};

struct KeyPair {
  VerifyKey vk;
  SigningKey sk;
};

struct Signature {
  Bytes preimages;  // kSignatureBytes: one revealed secret per digest bit
  bool operator==(const Signature&) const = default;
};

KeyPair kgen(Rng& rng);
// Reveals the preimage selected by each digest bit.  Rejects signing keys of
// the wrong size with std::invalid_argument; one key must sign one message.
Signature sign(const SigningKey& sk, ByteView message);
// Returns false for any mismatch, including malformed key/signature lengths.
bool verify(const VerifyKey& vk, ByteView message, const Signature& sig);

}  // namespace pkeet::ots

#endif  // PKEET_OTS_HPP_
