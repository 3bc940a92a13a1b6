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

#include "pkeet/tbe.hpp"

using namespace pkeet;
namespace g = pkeet::group;

namespace {

const GroupParams kTiny = g::tiny_test_params();

// Key material fixed by the worked example: exponents
// (g1, x1, x2, y1, y2) = (2, 3, 4, 5, 2) in the tiny group.
struct Fixture {
  tbe::EncKey ek;
  tbe::DecKey dk;
};

Fixture fixture_keys() {
  Fixture f;
  f.dk = tbe::DecKey{{3}, {4}, {5}, {2}};
  f.ek.g1 = GroupElement{2};
  f.ek.z = g::exp(kTiny, f.ek.g1, f.dk.x1);
  f.ek.g2 = g::exp(kTiny, f.ek.z, g::scalar_inv(kTiny, f.dk.x2));
  f.ek.u1 = g::exp(kTiny, f.ek.g1, f.dk.y1);
  f.ek.u2 = g::exp(kTiny, f.ek.g2, f.dk.y2);
  return f;
}

GroupParams params64() {
  static GroupParams p = [] {
    Rng rng = Rng::from_seed(6400);
    return g::generate_params(64, rng);
  }();
  return p;
}

}  // namespace

TEST_CASE("worked example: keys, encryption, and every decryption coin") {
  Fixture f = fixture_keys();
  CHECK(f.ek.z.value == 8);
  CHECK(f.ek.g2.value == 6);
  CHECK(f.ek.u1.value == 9);
  CHECK(f.ek.u2.value == 13);

  tbe::Ciphertext ct =
      tbe::enc(kTiny, f.ek, Scalar{7}, GroupElement{3}, Scalar{2}, Scalar{3});
  CHECK(ct.c1.value == 4);
  CHECK(ct.c2.value == 9);
  CHECK(ct.d1.value == 3);
  CHECK(ct.d2.value == 13);
  CHECK(ct.e.value == 2);

  // Decryption is exact for every choice of the blinding coins.
  for (unsigned long s1 = 1; s1 <= 10; ++s1) {
    for (unsigned long s2 = 1; s2 <= 10; ++s2) {
      GroupElement pt =
          tbe::dec(kTiny, f.dk, Scalar{7}, ct, Scalar{s1}, Scalar{s2});
      CHECK(pt.value == 3);
    }
  }
}

TEST_CASE("setup keys satisfy their defining relations") {
  Rng rng = Rng::from_seed(31);
  for (const GroupParams& params : {kTiny, params64()}) {
    for (int i = 0; i < 10; ++i) {
      auto [ek, dk] = tbe::setup(params, rng);
      CHECK(g::exp(params, ek.g1, dk.x1) == ek.z);
      CHECK(g::exp(params, ek.g2, dk.x2) == ek.z);
      CHECK(g::exp(params, ek.g1, dk.y1) == ek.u1);
      CHECK(g::exp(params, ek.g2, dk.y2) == ek.u2);
      CHECK(ek.z.value != 1);
      for (const GroupElement* e : {&ek.g1, &ek.g2, &ek.z, &ek.u1, &ek.u2}) {
        CHECK(g::is_member(params, e->value));
      }
      for (const Scalar* s : {&dk.x1, &dk.x2, &dk.y1, &dk.y2}) {
        CHECK(s->value != 0);
      }
    }
  }
}

TEST_CASE("round trips across tags, plaintexts, and parameter sizes") {
  Rng rng = Rng::from_seed(32);
  for (const GroupParams& params : {kTiny, params64()}) {
    auto [ek, dk] = tbe::setup(params, rng);
    for (int i = 0; i < 50; ++i) {
      Scalar tag = g::random_scalar(params, rng);
      GroupElement pt = g::random_element(params, rng);
      tbe::Ciphertext ct = tbe::enc(params, ek, tag, pt, rng);
      CHECK(tbe::dec(params, dk, tag, ct, rng) == pt);
    }
    // Zero randomness and the zero tag are legal corner cases.
    GroupElement pt = g::random_element(params, rng);
    tbe::Ciphertext ct =
        tbe::enc(params, ek, Scalar{0}, pt, Scalar{0}, Scalar{0});
    CHECK(tbe::dec(params, dk, Scalar{0}, ct, rng) == pt);
  }
}

TEST_CASE("well-formed decryption is independent of the decrypter's coins") {
  Rng rng = Rng::from_seed(35);
  for (const GroupParams& params : {kTiny, params64()}) {
    auto [ek, dk] = tbe::setup(params, rng);
    Scalar tag = g::random_scalar(params, rng);
    GroupElement pt = g::random_element(params, rng);
    tbe::Ciphertext ct = tbe::enc(params, ek, tag, pt, rng);
    for (int i = 0; i < 20; ++i) {
      CHECK(tbe::dec(params, dk, tag, ct, rng) == pt);
    }
  }
}

TEST_CASE("independent setups share no key material") {
  GroupParams params = params64();
  Rng rng = Rng::from_seed(38);
  auto [ek_a, dk_a] = tbe::setup(params, rng);
  auto [ek_b, dk_b] = tbe::setup(params, rng);
  for (auto [a, b] : {std::pair{&ek_a.g1, &ek_b.g1},
                      {&ek_a.g2, &ek_b.g2},
                      {&ek_a.z, &ek_b.z},
                      {&ek_a.u1, &ek_b.u1},
                      {&ek_a.u2, &ek_b.u2}}) {
    CHECK(*a != *b);
  }
  for (auto [a, b] : {std::pair{&dk_a.x1, &dk_b.x1},
                      {&dk_a.x2, &dk_b.x2},
                      {&dk_a.y1, &dk_b.y1},
                      {&dk_a.y2, &dk_b.y2}}) {
    CHECK(a->value != b->value);
  }
}

TEST_CASE("the identity plaintext leaves only the mask in E") {
  Fixture f = fixture_keys();
  // With coins (r1, r2) the mask is z^(r1+r2); encrypting the identity
  // makes E the bare mask, and decryption returns the identity.
  tbe::Ciphertext ct =
      tbe::enc(kTiny, f.ek, Scalar{7}, g::identity(), Scalar{2}, Scalar{3});
  CHECK(ct.e == g::exp(kTiny, f.ek.z, Scalar{5}));
  Rng rng = Rng::from_seed(39);
  CHECK(tbe::dec(kTiny, f.dk, Scalar{7}, ct, rng) == g::identity());
}

TEST_CASE("statistics at q = 11: wrong tags and malformed ciphertexts") {
  GroupParams params = kTiny;
  Rng rng = Rng::from_seed(37);
  auto [ek, dk] = tbe::setup(params, rng);
  const int kTrials = 200;

  // Decrypting an honest ciphertext under a different tag returns the
  // original plaintext only when the decryption coins conspire; per trial
  // that chance is 1/(q-1), comfortably inside the documented 2/q bound.
  int hits = 0;
  for (int i = 0; i < kTrials; ++i) {
    Scalar tag = g::random_scalar(params, rng);
    GroupElement pt = g::random_element(params, rng);
    tbe::Ciphertext ct = tbe::enc(params, ek, tag, pt, rng);
    Scalar other =
        g::scalar_add(params, tag, g::random_nonzero_scalar(params, rng));
    if (tbe::dec(params, dk, other, ct, rng) == pt) ++hits;
  }
  // Mean 20 at p = 1/10; the band is over four sigma wide on each side.
  CHECK(hits >= 4);
  CHECK(hits <= 40);

  // A random (malformed) ciphertext decrypts to coin-dependent values, so
  // two repeat decryptions agree at about the same 1/10 rate.
  int agreements = 0;
  for (int i = 0; i < kTrials; ++i) {
    tbe::Ciphertext junk{g::random_element(params, rng),
                         g::random_element(params, rng),
                         g::random_element(params, rng),
                         g::random_element(params, rng),
                         g::random_element(params, rng)};
    Scalar tag = g::random_scalar(params, rng);
    if (tbe::dec(params, dk, tag, junk, rng) ==
        tbe::dec(params, dk, tag, junk, rng)) {
      ++agreements;
    }
  }
  CHECK(agreements >= 4);
  CHECK(agreements <= 40);
}

TEST_CASE("non-member plaintexts are rejected") {
  Rng rng = Rng::from_seed(33);
  auto [ek, dk] = tbe::setup(kTiny, rng);
  (void)dk;
  CHECK_THROWS_AS(tbe::enc(kTiny, ek, Scalar{1}, GroupElement{5}, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(tbe::enc(kTiny, ek, Scalar{1}, GroupElement{0}, rng),
                  std::invalid_argument);
}

TEST_CASE("implicit rejection randomizes inconsistent ciphertexts") {
  GroupParams params = params64();
  Rng rng = Rng::from_seed(34);
  auto [ek, dk] = tbe::setup(params, rng);
  Scalar tag = g::random_scalar(params, rng);
  GroupElement pt = g::random_element(params, rng);
  tbe::Ciphertext ct = tbe::enc(params, ek, tag, pt, rng);

  // Decrypting under a different tag never fails; it returns values that
  // depend on the decrypter's coins, so repeated calls disagree.
  Scalar other = g::scalar_add(params, tag, Scalar{1});
  GroupElement d1 = tbe::dec(params, dk, other, ct, rng);
  GroupElement d2 = tbe::dec(params, dk, other, ct, rng);
  CHECK(g::is_member(params, d1.value));
  CHECK(g::is_member(params, d2.value));
  CHECK(d1 != d2);

  // Same for a ciphertext with a mauled component.
  tbe::Ciphertext bad = ct;
  bad.c1 = g::mul(params, bad.c1, GroupElement{params.generator});
  GroupElement b1 = tbe::dec(params, dk, tag, bad, rng);
  GroupElement b2 = tbe::dec(params, dk, tag, bad, rng);
  CHECK(b1 != b2);

  // Fixed coins make the randomized decryption reproducible.
  GroupElement r1 = tbe::dec(params, dk, other, ct, Scalar{5}, Scalar{9});
  GroupElement r2 = tbe::dec(params, dk, other, ct, Scalar{5}, Scalar{9});
  CHECK(r1 == r2);
}

TEST_CASE("ciphertext bytes round trip and validate") {
  Rng rng = Rng::from_seed(35);
  for (const GroupParams& params : {kTiny, params64()}) {
    auto [ek, dk] = tbe::setup(params, rng);
    (void)dk;
    Scalar tag = g::random_scalar(params, rng);
    GroupElement pt = g::random_element(params, rng);
    tbe::Ciphertext ct = tbe::enc(params, ek, tag, pt, rng);

    Bytes b = tbe::ciphertext_to_bytes(params, ct);
    CHECK(b.size() == 5 * params.element_size());
    CHECK(tbe::ciphertext_from_bytes(params, b) == ct);

    Bytes truncated(b.begin(), b.end() - 1);
    CHECK_THROWS_AS(tbe::ciphertext_from_bytes(params, truncated), ParseError);
    Bytes extended = b;
    extended.push_back(0);
    CHECK_THROWS_AS(tbe::ciphertext_from_bytes(params, extended), ParseError);
  }
  // A non-member component is caught.
  Bytes bad = {5, 1, 1, 1, 1};
  CHECK_THROWS_AS(tbe::ciphertext_from_bytes(kTiny, bad), ParseError);
}
