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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pkeet/io.hpp"
#include "pkeet/pkeet.hpp"

using namespace pkeet;
namespace g = pkeet::group;

namespace {

PublicParams params64() {
  static PublicParams pp = [] {
    Rng rng = Rng::from_seed(9900);
    return setup(64, rng);
  }();
  return pp;
}

PublicParams params128() {
  static PublicParams pp = [] {
    Rng rng = Rng::from_seed(9901);
    return setup(128, rng);
  }();
  return pp;
}

}  // namespace

TEST_CASE("setup is deterministic under a seed and independent across keys") {
  Rng r1 = Rng::from_seed(40);
  Rng r2 = Rng::from_seed(40);
  CHECK(io::params_to_bytes(setup(64, r1)) ==
        io::params_to_bytes(setup(64, r2)));

  // Two users under one pp share the group but no secret material.
  PublicParams pp = params64();
  Rng rng = Rng::from_seed(39);
  auto [ek_a, dk_a] = kgen(pp, rng);
  auto [ek_b, dk_b] = kgen(pp, rng);
  (void)ek_a;
  (void)ek_b;
  for (const tbe::DecKey* a : {&dk_a.pt, &dk_a.cmp}) {
    for (const tbe::DecKey* b : {&dk_b.pt, &dk_b.cmp}) {
      CHECK(a->x1.value != b->x1.value);
      CHECK(a->x2.value != b->x2.value);
      CHECK(a->y1.value != b->y1.value);
      CHECK(a->y2.value != b->y2.value);
    }
  }
}

TEST_CASE("encrypt/decrypt round trips for every encodable message") {
  PublicParams pp = tiny_test_params();
  Rng rng = Rng::from_seed(41);
  auto [ek, dk] = kgen(pp, rng);
  for (unsigned long m = 1; m <= 11; ++m) {
    GroupElement pt = g::encode_message(pp.group, m);
    Ciphertext ct = enc(pp, ek, pt, rng);
    auto back = dec(pp, dk, ct, rng);
    REQUIRE(back.has_value());
    CHECK(*back == pt);
    CHECK(g::decode_message(pp.group, *back) == m);
  }
}

TEST_CASE("round trips at a realistic size") {
  PublicParams pp = params64();
  Rng rng = Rng::from_seed(42);
  auto [ek, dk] = kgen(pp, rng);
  for (int i = 0; i < 20; ++i) {
    GroupElement pt = g::random_element(pp.group, rng);
    auto back = dec(pp, dk, enc(pp, ek, pt, rng), rng);
    REQUIRE(back.has_value());
    CHECK(*back == pt);
  }
}

TEST_CASE("wrong key decrypts to a rejection, not a wrong value") {
  PublicParams pp = params64();
  Rng rng = Rng::from_seed(43);
  auto [ek_a, dk_a] = kgen(pp, rng);
  auto [ek_b, dk_b] = kgen(pp, rng);
  (void)ek_b;
  (void)dk_a;
  // Under the wrong key both branches decrypt to unrelated values, so the
  // hash consistency check fails (up to negligible collision chance).
  for (int i = 0; i < 100; ++i) {
    GroupElement pt = g::random_element(pp.group, rng);
    Ciphertext ct = enc(pp, ek_a, pt, rng);
    CHECK_FALSE(dec(pp, dk_b, ct, rng).has_value());
  }
}

TEST_CASE("equality testing works across users") {
  PublicParams pp = params64();
  Rng rng = Rng::from_seed(44);
  auto [ek_a, dk_a] = kgen(pp, rng);
  auto [ek_b, dk_b] = kgen(pp, rng);
  Trapdoor td_a = tdgen(dk_a);
  Trapdoor td_b = tdgen(dk_b);

  for (int i = 0; i < 20; ++i) {
    GroupElement pt = g::random_element(pp.group, rng);
    GroupElement other = pt;
    while (other == pt) other = g::random_element(pp.group, rng);

    Ciphertext ct_a = enc(pp, ek_a, pt, rng);
    Ciphertext ct_b = enc(pp, ek_b, pt, rng);
    Ciphertext ct_c = enc(pp, ek_b, other, rng);

    CHECK(test_equality(pp, {ct_a, td_a, &ek_a}, {ct_b, td_b, &ek_b}, false,
                        rng));
    CHECK_FALSE(test_equality(pp, {ct_a, td_a, &ek_a}, {ct_c, td_b, &ek_b},
                              false, rng));
    // A ciphertext always tests equal to itself.
    CHECK(test_equality(pp, {ct_a, td_a, &ek_a}, {ct_a, td_a, &ek_a}, false,
                        rng));
  }
}

TEST_CASE("distinct plaintexts never test equal at a 128-bit order") {
  // The comparison handle is a group hash, so inequality can only fail via a
  // hash collision; at this size none of 500 trials may hit one.
  PublicParams pp = params128();
  Rng rng = Rng::from_seed(53);
  auto [ek_a, dk_a] = kgen(pp, rng);
  auto [ek_b, dk_b] = kgen(pp, rng);
  Trapdoor td_a = tdgen(dk_a);
  Trapdoor td_b = tdgen(dk_b);

  int collisions = 0;
  for (int i = 0; i < 500; ++i) {
    GroupElement pt = g::random_element(pp.group, rng);
    GroupElement other = pt;
    while (other == pt) other = g::random_element(pp.group, rng);
    Ciphertext ct_a = enc(pp, ek_a, pt, rng);
    Ciphertext ct_b = enc(pp, ek_b, other, rng);
    if (test_equality(pp, {ct_a, td_a, &ek_a}, {ct_b, td_b, &ek_b}, false,
                      rng)) {
      ++collisions;
    }
  }
  CHECK(collisions == 0);
}

TEST_CASE("repeated encryption of one plaintext yields fresh ciphertexts") {
  // Every call draws a fresh one-time key and fresh branch randomness, so
  // even the same message under the same key never repeats on the wire.
  PublicParams pp = params64();
  Rng rng = Rng::from_seed(54);
  auto [ek, dk] = kgen(pp, rng);
  (void)dk;
  GroupElement pt = g::random_element(pp.group, rng);

  std::set<Bytes> seen;
  for (int i = 0; i < 100; ++i) {
    seen.insert(ciphertext_to_bytes(pp, enc(pp, ek, pt, rng)));
  }
  CHECK(seen.size() == 100);
}

TEST_CASE("signature failures reject decryption and gate strict testing") {
  PublicParams pp = params64();
  Rng rng = Rng::from_seed(45);
  auto [ek, dk] = kgen(pp, rng);
  Trapdoor td = tdgen(dk);
  GroupElement pt = g::random_element(pp.group, rng);
  Ciphertext ct = enc(pp, ek, pt, rng);
  Ciphertext other = enc(pp, ek, pt, rng);

  Ciphertext bad = ct;
  bad.sig.preimages[17] ^= 0x01;
  CHECK_FALSE(dec(pp, dk, bad, rng).has_value());

  // Default testing ignores signatures; strict mode does not.
  CHECK(test_equality(pp, {bad, td, &ek}, {other, td, &ek}, false, rng));
  CHECK_FALSE(test_equality(pp, {bad, td, &ek}, {other, td, &ek}, true, rng));
  CHECK(test_equality(pp, {ct, td, &ek}, {other, td, &ek}, true, rng));
}

TEST_CASE("a forged cmp branch with a valid signature fails the hash check") {
  PublicParams pp = params64();
  Rng rng = Rng::from_seed(46);
  auto [ek, dk] = kgen(pp, rng);
  GroupElement pt = g::random_element(pp.group, rng);
  GroupElement other = pt;
  while (other == pt) other = g::random_element(pp.group, rng);

  // Rebuild encryption by hand, but bind the cmp branch to a different
  // plaintext's hash.  The signature is honest over the mismatched pair, so
  // only the decrypt-side consistency check can catch it.
  ots::KeyPair otk = ots::kgen(rng);
  Scalar tag = tag_for(pp, otk.vk);
  Ciphertext forged;
  forged.vk = otk.vk;
  forged.pt_ct = tbe::enc(pp.group, ek.pt, tag, pt, rng);
  forged.cmp_ct = tbe::enc(pp.group, ek.cmp, tag, hash_plaintext(pp, other), rng);
  Bytes msg = tbe::ciphertext_to_bytes(pp.group, forged.pt_ct);
  append(msg, tbe::ciphertext_to_bytes(pp.group, forged.cmp_ct));
  forged.sig = ots::sign(otk.sk, msg);

  CHECK(ots::verify(forged.vk, msg, forged.sig));
  CHECK_FALSE(dec(pp, dk, forged, rng).has_value());
}

TEST_CASE("vk substitution invalidates the signature binding") {
  PublicParams pp = params64();
  Rng rng = Rng::from_seed(47);
  auto [ek, dk] = kgen(pp, rng);
  GroupElement pt = g::random_element(pp.group, rng);
  Ciphertext a = enc(pp, ek, pt, rng);
  Ciphertext b = enc(pp, ek, pt, rng);

  Ciphertext spliced = a;
  spliced.vk = b.vk;
  CHECK_FALSE(dec(pp, dk, spliced, rng).has_value());

  Ciphertext crossed = a;
  crossed.cmp_ct = b.cmp_ct;  // branches from different encryptions
  CHECK_FALSE(dec(pp, dk, crossed, rng).has_value());
}

TEST_CASE("ciphertext wire format round trips and validates") {
  for (PublicParams pp : {tiny_test_params(), params64()}) {
    Rng rng = Rng::from_seed(48);
    auto [ek, dk] = kgen(pp, rng);
    GroupElement pt = g::random_element(pp.group, rng);
    Ciphertext ct = enc(pp, ek, pt, rng);

    Bytes wire = ciphertext_to_bytes(pp, ct);
    Ciphertext back = ciphertext_from_bytes(pp, wire);
    CHECK(back == ct);
    CHECK(ciphertext_to_bytes(pp, back) == wire);
    REQUIRE(dec(pp, dk, back, rng).has_value());

    CHECK_THROWS_AS(ciphertext_from_bytes(pp, ByteView(wire).first(10)),
                    ParseError);
    Bytes bad_magic = wire;
    bad_magic[0] ^= 0xff;
    CHECK_THROWS_AS(ciphertext_from_bytes(pp, bad_magic), ParseError);
    Bytes trailing = wire;
    trailing.push_back(0);
    CHECK_THROWS_AS(ciphertext_from_bytes(pp, trailing), ParseError);
  }
}

TEST_CASE("encryption is deterministic under a fixed seed") {
  PublicParams pp = tiny_test_params();
  Rng krng = Rng::from_seed(49);
  auto [ek, dk] = kgen(pp, krng);
  (void)dk;
  GroupElement pt = g::encode_message(pp.group, 7);

  Rng r1 = Rng::from_seed(50);
  Rng r2 = Rng::from_seed(50);
  CHECK(ciphertext_to_bytes(pp, enc(pp, ek, pt, r1)) ==
        ciphertext_to_bytes(pp, enc(pp, ek, pt, r2)));
  // ...and randomized otherwise: a fresh one-time key forces distinct bytes.
  Rng r3 = Rng::from_seed(51);
  CHECK(ciphertext_to_bytes(pp, enc(pp, ek, pt, r3)) !=
        ciphertext_to_bytes(pp, enc(pp, ek, pt, r3)));
}

TEST_CASE("the tag is the hash of the one-time verification key") {
  PublicParams pp = tiny_test_params();
  Rng rng = Rng::from_seed(52);
  ots::KeyPair otk = ots::kgen(rng);
  CHECK(tag_for(pp, otk.vk) ==
        g::hash_to_scalar(pp.group, otk.vk.digests));
  GroupElement pt = g::encode_message(pp.group, 3);
  CHECK(hash_plaintext(pp, pt) ==
        g::hash_to_group(pp.group, g::element_to_bytes(pp.group, pt)));
}
