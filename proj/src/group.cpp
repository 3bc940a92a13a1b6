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

#include "pkeet/group.hpp"

#include <stdexcept>

#include "pkeet/sha256.hpp"

namespace pkeet {

namespace {

constexpr std::string_view kHashToScalarPrefix = "PKEET/H2S:";
constexpr std::string_view kHashToGroupPrefix = "PKEET/H2G:";

std::size_t byte_width(const mpz_class& v) {
  return (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
}

// Big-endian, zero-padded on the left to exactly `width` bytes.
Bytes fixed_width_be(const mpz_class& v, std::size_t width) {
  Bytes out(width, 0);
  if (v != 0) {
    std::size_t n = byte_width(v);
    std::size_t count = 0;
    mpz_export(out.data() + (width - n), &count, 1, 1, 1, 0, v.get_mpz_t());
  }
  return out;
}

mpz_class mpz_from_be(ByteView data) {
  mpz_class v;
  if (!data.empty()) {
    mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  }
  return v;
}

mpz_class digest_mod(std::string_view prefix, ByteView data,
                     const mpz_class& modulus) {
  Digest32 d = sha256({as_bytes(prefix), data});
  return mpz_from_be(ByteView(d)) % modulus;
}

}  // namespace

std::size_t GroupParams::element_size() const {
  return byte_width(modulus);
}

std::size_t GroupParams::scalar_size() const {
  return byte_width(order);
}

namespace group {

namespace {
bool probably_prime(const mpz_class& v, int reps) {
  return mpz_probab_prime_p(v.get_mpz_t(), reps) != 0;
}
}  // namespace

GroupParams generate_params(unsigned security_bits, Rng& rng) {
  if (security_bits < 8) {
    throw std::invalid_argument("security_bits must be at least 8");
  }
  const mpz_class one = 1;
  const unsigned long max_tries = 200000ul + 4000ul * security_bits;
  GroupParams params;
  params.security_bits = security_bits;
  bool found = false;
  for (unsigned long i = 0; i < max_tries && !found; ++i) {
    mpz_class q = rng.below(one << security_bits);
    mpz_setbit(q.get_mpz_t(), security_bits - 1);  // exactly security_bits bits
    mpz_setbit(q.get_mpz_t(), 0);
    if (!probably_prime(q, 28)) continue;
    mpz_class p = 2 * q + 1;
    if (!probably_prime(p, 28)) continue;
    // Deeper confirmation pass on the candidate that survived.
    if (!probably_prime(q, 64) || !probably_prime(p, 64)) continue;
    params.order = q;
    params.modulus = p;
    found = true;
  }
  if (!found) {
    throw std::runtime_error("safe-prime search exhausted its retry budget");
  }
  // Any square of h in [2, P-2] generates the order-q subgroup.
  do {
    mpz_class h = 2 + rng.below(params.modulus - 4);
    params.generator = h * h % params.modulus;
  } while (params.generator == 1);
  return params;
}

GroupParams tiny_test_params() {
  return GroupParams{23, 11, 2, 4};
}

bool validate_params(const GroupParams& params) {
  if (params.modulus <= 0 || params.order <= 0) return false;
  if (params.modulus != 2 * params.order + 1) return false;
  if (!probably_prime(params.modulus, 30)) return false;
  if (!probably_prime(params.order, 30)) return false;
  if (params.generator <= 1 || params.generator >= params.modulus) return false;
  return is_member(params, params.generator);
}

bool is_member(const GroupParams& params, const mpz_class& v) {
  if (v < 1 || v >= params.modulus) return false;
  mpz_class r;
  mpz_powm(r.get_mpz_t(), v.get_mpz_t(), params.order.get_mpz_t(),
           params.modulus.get_mpz_t());
  return r == 1;
}

GroupElement identity() {
  return GroupElement{1};
}

GroupElement mul(const GroupParams& params, const GroupElement& a,
                 const GroupElement& b) {
  return GroupElement{a.value * b.value % params.modulus};
}

GroupElement inv(const GroupParams& params, const GroupElement& a) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(),
                 params.modulus.get_mpz_t()) == 0) {
    throw std::invalid_argument("element not invertible");
  }
  return GroupElement{r};
}

GroupElement exp(const GroupParams& params, const GroupElement& base,
                 const Scalar& e) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.value.get_mpz_t(), e.value.get_mpz_t(),
           params.modulus.get_mpz_t());
  return GroupElement{r};
}

Scalar scalar_from(const GroupParams& params, const mpz_class& v) {
  mpz_class r = v % params.order;
  if (r < 0) r += params.order;
  return Scalar{r};
}

Scalar scalar_add(const GroupParams& params, const Scalar& a, const Scalar& b) {
  return Scalar{(a.value + b.value) % params.order};
}

Scalar scalar_mul(const GroupParams& params, const Scalar& a, const Scalar& b) {
  return Scalar{a.value * b.value % params.order};
}

Scalar scalar_inv(const GroupParams& params, const Scalar& a) {
  if (a.value == 0) throw std::invalid_argument("zero scalar has no inverse");
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(), params.order.get_mpz_t());
  return Scalar{r};
}

GroupElement encode_message(const GroupParams& params, const mpz_class& m) {
  if (m < 1 || m > params.order) {
    throw std::invalid_argument("message out of range [1, q]");
  }
  if (mpz_legendre(m.get_mpz_t(), params.modulus.get_mpz_t()) == 1) {
    return GroupElement{m};
  }
  return GroupElement{params.modulus - m};
}

mpz_class decode_message(const GroupParams& params, const GroupElement& e) {
  if (e.value <= params.order) return e.value;
  return params.modulus - e.value;
}

Scalar hash_to_scalar(const GroupParams& params, ByteView data) {
  return Scalar{digest_mod(kHashToScalarPrefix, data, params.order)};
}

GroupElement hash_to_group(const GroupParams& params, ByteView data) {
  Scalar e{digest_mod(kHashToGroupPrefix, data, params.order)};
  return exp(params, GroupElement{params.generator}, e);
}

Scalar random_scalar(const GroupParams& params, Rng& rng) {
  return Scalar{rng.below(params.order)};
}

Scalar random_nonzero_scalar(const GroupParams& params, Rng& rng) {
  return Scalar{1 + rng.below(params.order - 1)};
}

GroupElement random_element(const GroupParams& params, Rng& rng) {
  return exp(params, GroupElement{params.generator}, random_scalar(params, rng));
}

GroupElement random_nonidentity_element(const GroupParams& params, Rng& rng) {
  return exp(params, GroupElement{params.generator},
             random_nonzero_scalar(params, rng));
}

Bytes element_to_bytes(const GroupParams& params, const GroupElement& e) {
  return fixed_width_be(e.value, params.element_size());
}

GroupElement element_from_bytes(const GroupParams& params, ByteView data) {
  if (data.size() != params.element_size()) {
    throw ParseError("bad element width");
  }
  mpz_class v = mpz_from_be(data);
  if (!is_member(params, v)) {
    throw ParseError("element fails subgroup membership");
  }
  return GroupElement{v};
}

Bytes scalar_to_bytes(const GroupParams& params, const Scalar& s) {
  return fixed_width_be(s.value, params.scalar_size());
}

Scalar scalar_from_bytes(const GroupParams& params, ByteView data) {
  if (data.size() != params.scalar_size()) {
    throw ParseError("bad scalar width");
  }
  mpz_class v = mpz_from_be(data);
  if (v >= params.order) {
    throw ParseError("scalar out of range");
  }
  return Scalar{v};
}

}  // namespace group
}  // namespace pkeet
