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

#ifndef PKEET_TBE_HPP_
#define PKEET_TBE_HPP_

#include <utility>

#include "pkeet/bytes.hpp"
#include "pkeet/group.hpp"
#include "pkeet/rng.hpp"

namespace pkeet::tbe {

// Tag-based encryption in a prime-order group, linear-assumption style: two
// generators share one "z" and carry tag-dependent blinding bases u1, u2.

struct EncKey {
  GroupElement g1, g2, z, u1, u2;
  bool operator==(const EncKey&) const = default;
};

struct DecKey {
  Scalar x1, x2, y1, y2;  // z = g1^x1 = g2^x2, u1 = g1^y1, u2 = g2^y2
  bool operator==(const DecKey&) const = default;
};

struct Ciphertext {
  GroupElement c1, c2, d1, d2, e;
  bool operator==(const Ciphertext&) const = default;
};

// Samples g1 and nonzero exponents; derives g2 = g1^(x1/x2).
std::pair<EncKey, DecKey> setup(const GroupParams& params, Rng& rng);

// C_i = g_i^{r_i}, D_i = (z^tag u_i)^{r_i}, E = pt * z^{r1 + r2}.
// Non-member plaintexts are rejected with std::invalid_argument.
Ciphertext enc(const GroupParams& params, const EncKey& ek, const Scalar& tag,
               const GroupElement& pt, Rng& rng);
Ciphertext enc(const GroupParams& params, const EncKey& ek, const Scalar& tag,
               const GroupElement& pt, const Scalar& r1, const Scalar& r2);

// Randomized decryption with implicit rejection: fresh nonzero s1, s2 fold a
// consistency check into the unblinding, so malformed ciphertexts decrypt to
// a value the decrypter cannot distinguish from random.  Never fails on
// well-typed input.
GroupElement dec(const GroupParams& params, const DecKey& dk, const Scalar& tag,
                 const Ciphertext& ct, Rng& rng);
GroupElement dec(const GroupParams& params, const DecKey& dk, const Scalar& tag,
                 const Ciphertext& ct, const Scalar& s1, const Scalar& s2);

// Five fixed-width elements, C1 || C2 || D1 || D2 || E.
Bytes ciphertext_to_bytes(const GroupParams& params, const Ciphertext& ct);
Ciphertext ciphertext_from_bytes(const GroupParams& params, ByteView data);

}  // namespace pkeet::tbe

#endif  // PKEET_TBE_HPP_
