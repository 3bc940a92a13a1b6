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

#ifndef PKEET_GROUP_HPP_
#define PKEET_GROUP_HPP_

#include <gmpxx.h>

#include <cstddef>

#include "pkeet/bytes.hpp"
#include "pkeet/rng.hpp"

namespace pkeet {

// Prime-order group: the order-q subgroup of quadratic residues mod a safe
// prime P = 2q + 1.
struct GroupParams {
  mpz_class modulus;    // P, safe prime
  mpz_class order;      // q = (P - 1) / 2, prime
  mpz_class generator;  // g, generates the subgroup of quadratic residues
  unsigned security_bits = 0;

  // Fixed-width sizes used by every canonical encoding under these params.
  std::size_t element_size() const;
  std::size_t scalar_size() const;

  bool operator==(const GroupParams&) const = default;
};

struct GroupElement {
  mpz_class value;
  bool operator==(const GroupElement&) const = default;
};

struct Scalar {
  mpz_class value;  // in [0, q)
  bool operator==(const Scalar&) const = default;
};

namespace group {

// Samples a safe prime with a q of exactly `security_bits` bits and a
// generator of the QR subgroup.  Throws std::runtime_error if the retry
// budget is exhausted (broken randomness) and std::invalid_argument for
// security_bits < 8.
GroupParams generate_params(unsigned security_bits, Rng& rng);

// The fixed P = 23, q = 11, g = 2 group used by worked examples and unit
// tests.  Provides no security.
GroupParams tiny_test_params();

// Structural checks: primality of P and q, P = 2q + 1, generator membership.
bool validate_params(const GroupParams& params);

// True iff 1 <= v < P and v^q = 1 (mod P).
bool is_member(const GroupParams& params, const mpz_class& v);

GroupElement identity();
GroupElement mul(const GroupParams& params, const GroupElement& a,
                 const GroupElement& b);
GroupElement inv(const GroupParams& params, const GroupElement& a);
GroupElement exp(const GroupParams& params, const GroupElement& base,
                 const Scalar& e);

Scalar scalar_from(const GroupParams& params, const mpz_class& v);
Scalar scalar_add(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar scalar_mul(const GroupParams& params, const Scalar& a, const Scalar& b);
// Multiplicative inverse mod q; rejects zero with std::invalid_argument.
Scalar scalar_inv(const GroupParams& params, const Scalar& a);

// Injective message embedding on [1, q]: m if m is a QR mod P, else P - m.
// Out-of-range messages are rejected with std::invalid_argument.
GroupElement encode_message(const GroupParams& params, const mpz_class& m);
mpz_class decode_message(const GroupParams& params, const GroupElement& e);

// Domain-separated hashes: SHA-256 over "PKEET/H2S:" || data reduced mod q,
// and g^h for the "PKEET/H2G:" variant.
Scalar hash_to_scalar(const GroupParams& params, ByteView data);
GroupElement hash_to_group(const GroupParams& params, ByteView data);

Scalar random_scalar(const GroupParams& params, Rng& rng);           // [0, q)
Scalar random_nonzero_scalar(const GroupParams& params, Rng& rng);   // [1, q)
GroupElement random_element(const GroupParams& params, Rng& rng);
GroupElement random_nonidentity_element(const GroupParams& params, Rng& rng);

// Canonical encodings: fixed-width big-endian, element_size()/scalar_size()
// bytes.  Decoding validates width, range, and subgroup membership; failures
// throw ParseError.
Bytes element_to_bytes(const GroupParams& params, const GroupElement& e);
GroupElement element_from_bytes(const GroupParams& params, ByteView data);
Bytes scalar_to_bytes(const GroupParams& params, const Scalar& s);
Scalar scalar_from_bytes(const GroupParams& params, ByteView data);

}  // namespace group
}  // namespace pkeet

#endif  // PKEET_GROUP_HPP_
