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

#ifndef PKEET_PKEET_HPP_
#define PKEET_PKEET_HPP_

#include <optional>
#include <utility>

#include "pkeet/group.hpp"
#include "pkeet/ots.hpp"
#include "pkeet/tbe.hpp"

namespace pkeet {

// Public-key encryption with equality test.  Each ciphertext carries two
// tag-based encryptions under a one-time tag (the hash of a fresh one-time
// verification key): the pt branch holds the plaintext, the cmp branch holds
// the plaintext's group hash.  A user's trapdoor opens only the cmp branch,
// so holders can compare ciphertexts across users without learning
// plaintexts.

inline constexpr std::uint8_t kHashSha256 = 0x01;

struct PublicParams {
  std::uint8_t hash_id = kHashSha256;
  GroupParams group;
  bool operator==(const PublicParams&) const = default;
};

struct EncKey {
  tbe::EncKey pt, cmp;
  bool operator==(const EncKey&) const = default;
};

struct DecKey {
  tbe::DecKey pt, cmp;
  bool operator==(const DecKey&) const = default;
};

struct Trapdoor {
  tbe::DecKey cmp;
  bool operator==(const Trapdoor&) const = default;
};

struct Ciphertext {
  ots::VerifyKey vk;
  tbe::Ciphertext pt_ct;   // plaintext under tag H(vk)
  tbe::Ciphertext cmp_ct;  // hash of the plaintext under the same tag
  ots::Signature sig;      // binds pt_ct || cmp_ct to vk
  bool operator==(const Ciphertext&) const = default;
};

// One side of an equality test.  The encryption key slot is part of the
// tester's input; this instantiation never consults it, so it may be null.
struct TestInput {
  const Ciphertext& ct;
  const Trapdoor& td;
  const EncKey* ek = nullptr;
};

PublicParams setup(unsigned security_bits, Rng& rng);
PublicParams tiny_test_params();

std::pair<EncKey, DecKey> kgen(const PublicParams& pp, Rng& rng);

// Fresh one-time key pair per call; tag = hash of the verification key.
Ciphertext enc(const PublicParams& pp, const EncKey& ek, const GroupElement& pt,
               Rng& rng);

// Verifies the one-time signature, decrypts both branches, and accepts only
// if the cmp branch equals the hash of the recovered plaintext.  Returns
// nullopt on rejection.
std::optional<GroupElement> dec(const PublicParams& pp, const DecKey& dk,
                                const Ciphertext& ct, Rng& rng);

Trapdoor tdgen(const DecKey& dk);

// Compares the cmp branches of two ciphertexts (possibly under different
// users' keys).  With strict=true, a side whose signature fails verification
// makes the whole test return false.
bool test_equality(const PublicParams& pp, const TestInput& a,
                   const TestInput& b, bool strict, Rng& rng);

// The tag both branches are encrypted under: hash of the canonical vk bytes.
Scalar tag_for(const PublicParams& pp, const ots::VerifyKey& vk);

// The comparison handle stored in the cmp branch: group hash of the
// plaintext's canonical bytes.
GroupElement hash_plaintext(const PublicParams& pp, const GroupElement& pt);

// Canonical wire format: "PKEET1" followed by u32-BE length-prefixed vk,
// pt branch, cmp branch, signature.  The signed message is the raw
// concatenation of the two branches' canonical bytes (both fixed-width).
Bytes ciphertext_to_bytes(const PublicParams& pp, const Ciphertext& ct);
Ciphertext ciphertext_from_bytes(const PublicParams& pp, ByteView data);

}  // namespace pkeet

#endif  // PKEET_PKEET_HPP_
