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

#include "pkeet/tbe.hpp"

#include <stdexcept>

namespace pkeet::tbe {

namespace g = pkeet::group;

std::pair<EncKey, DecKey> setup(const GroupParams& params, Rng& rng) {
  DecKey dk{g::random_nonzero_scalar(params, rng),
            g::random_nonzero_scalar(params, rng),
            g::random_nonzero_scalar(params, rng),
            g::random_nonzero_scalar(params, rng)};
  EncKey ek;
  ek.g1 = g::random_nonidentity_element(params, rng);
  ek.z = g::exp(params, ek.g1, dk.x1);
  // g2 = z^(1/x2), so g2^x2 = z holds alongside g1^x1 = z.
  ek.g2 = g::exp(params, ek.z, g::scalar_inv(params, dk.x2));
  ek.u1 = g::exp(params, ek.g1, dk.y1);
  ek.u2 = g::exp(params, ek.g2, dk.y2);
  return {ek, dk};
}

Ciphertext enc(const GroupParams& params, const EncKey& ek, const Scalar& tag,
               const GroupElement& pt, Rng& rng) {
  return enc(params, ek, tag, pt, g::random_scalar(params, rng),
             g::random_scalar(params, rng));
}

Ciphertext enc(const GroupParams& params, const EncKey& ek, const Scalar& tag,
               const GroupElement& pt, const Scalar& r1, const Scalar& r2) {
  if (!g::is_member(params, pt.value)) {
    throw std::invalid_argument("plaintext is not a group member");
  }
  GroupElement z_tag = g::exp(params, ek.z, tag);
  Ciphertext ct;
  ct.c1 = g::exp(params, ek.g1, r1);
  ct.c2 = g::exp(params, ek.g2, r2);
  ct.d1 = g::exp(params, g::mul(params, z_tag, ek.u1), r1);
  ct.d2 = g::exp(params, g::mul(params, z_tag, ek.u2), r2);
  ct.e = g::mul(params, pt,
                g::exp(params, ek.z, g::scalar_add(params, r1, r2)));
  return ct;
}

GroupElement dec(const GroupParams& params, const DecKey& dk, const Scalar& tag,
                 const Ciphertext& ct, Rng& rng) {
  return dec(params, dk, tag, ct, g::random_nonzero_scalar(params, rng),
             g::random_nonzero_scalar(params, rng));
}

GroupElement dec(const GroupParams& params, const DecKey& dk, const Scalar& tag,
                 const Ciphertext& ct, const Scalar& s1, const Scalar& s2) {
  // K = C1^{x1 + s1 (tag x1 + y1)} * C2^{x2 + s2 (tag x2 + y2)} / (D1^s1 D2^s2).
  // For well-formed ciphertexts the s-terms cancel and K = z^{r1+r2}; for
  // inconsistent ones the fresh nonzero s1, s2 randomize the result.
  Scalar e1 = g::scalar_add(
      params, dk.x1, g::scalar_mul(params, s1,
                                   g::scalar_add(params,
                                                 g::scalar_mul(params, tag, dk.x1),
                                                 dk.y1)));
  Scalar e2 = g::scalar_add(
      params, dk.x2, g::scalar_mul(params, s2,
                                   g::scalar_add(params,
                                                 g::scalar_mul(params, tag, dk.x2),
                                                 dk.y2)));
  GroupElement num = g::mul(params, g::exp(params, ct.c1, e1),
                            g::exp(params, ct.c2, e2));
  GroupElement den = g::mul(params, g::exp(params, ct.d1, s1),
                            g::exp(params, ct.d2, s2));
  GroupElement k = g::mul(params, num, g::inv(params, den));
  return g::mul(params, ct.e, g::inv(params, k));
}

Bytes ciphertext_to_bytes(const GroupParams& params, const Ciphertext& ct) {
  Bytes out;
  out.reserve(5 * params.element_size());
  for (const GroupElement* e : {&ct.c1, &ct.c2, &ct.d1, &ct.d2, &ct.e}) {
    append(out, g::element_to_bytes(params, *e));
  }
  return out;
}

Ciphertext ciphertext_from_bytes(const GroupParams& params, ByteView data) {
  const std::size_t w = params.element_size();
  if (data.size() != 5 * w) throw ParseError("bad ciphertext length");
  ByteReader r(data);
  Ciphertext ct;
  for (GroupElement* e : {&ct.c1, &ct.c2, &ct.d1, &ct.d2, &ct.e}) {
    *e = g::element_from_bytes(params, r.take(w));
  }
  return ct;
}

}  // namespace pkeet::tbe
