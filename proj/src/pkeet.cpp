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

#include "pkeet/pkeet.hpp"

namespace pkeet {

namespace g = pkeet::group;

namespace {

constexpr std::string_view kCiphertextMagic = "PKEET1";

// The exact bytes the one-time signature covers.
Bytes signed_message(const GroupParams& params, const tbe::Ciphertext& pt_ct,
                     const tbe::Ciphertext& cmp_ct) {
  Bytes msg = tbe::ciphertext_to_bytes(params, pt_ct);
  append(msg, tbe::ciphertext_to_bytes(params, cmp_ct));
  return msg;
}

}  // namespace

PublicParams setup(unsigned security_bits, Rng& rng) {
  return PublicParams{kHashSha256, g::generate_params(security_bits, rng)};
}

PublicParams tiny_test_params() {
  return PublicParams{kHashSha256, g::tiny_test_params()};
}

std::pair<EncKey, DecKey> kgen(const PublicParams& pp, Rng& rng) {
  auto [ek_pt, dk_pt] = tbe::setup(pp.group, rng);
  auto [ek_cmp, dk_cmp] = tbe::setup(pp.group, rng);
  return {EncKey{ek_pt, ek_cmp}, DecKey{dk_pt, dk_cmp}};
}

Scalar tag_for(const PublicParams& pp, const ots::VerifyKey& vk) {
  return g::hash_to_scalar(pp.group, vk.digests);
}

GroupElement hash_plaintext(const PublicParams& pp, const GroupElement& pt) {
  return g::hash_to_group(pp.group, g::element_to_bytes(pp.group, pt));
}

Ciphertext enc(const PublicParams& pp, const EncKey& ek, const GroupElement& pt,
               Rng& rng) {
  ots::KeyPair otk = ots::kgen(rng);
  Scalar tag = tag_for(pp, otk.vk);
  Ciphertext ct;
  ct.vk = std::move(otk.vk);
  ct.pt_ct = tbe::enc(pp.group, ek.pt, tag, pt, rng);
  ct.cmp_ct = tbe::enc(pp.group, ek.cmp, tag, hash_plaintext(pp, pt), rng);
  ct.sig = ots::sign(otk.sk, signed_message(pp.group, ct.pt_ct, ct.cmp_ct));
  return ct;
}

std::optional<GroupElement> dec(const PublicParams& pp, const DecKey& dk,
                                const Ciphertext& ct, Rng& rng) {
  if (!ots::verify(ct.vk, signed_message(pp.group, ct.pt_ct, ct.cmp_ct),
                   ct.sig)) {
    return std::nullopt;
  }
  Scalar tag = tag_for(pp, ct.vk);
  GroupElement pt = tbe::dec(pp.group, dk.pt, tag, ct.pt_ct, rng);
  GroupElement h = tbe::dec(pp.group, dk.cmp, tag, ct.cmp_ct, rng);
  if (!(h == hash_plaintext(pp, pt))) return std::nullopt;
  return pt;
}

Trapdoor tdgen(const DecKey& dk) {
  return Trapdoor{dk.cmp};
}

bool test_equality(const PublicParams& pp, const TestInput& a,
                   const TestInput& b, bool strict, Rng& rng) {
  if (strict) {
    for (const TestInput* side : {&a, &b}) {
      Bytes msg = signed_message(pp.group, side->ct.pt_ct, side->ct.cmp_ct);
      if (!ots::verify(side->ct.vk, msg, side->ct.sig)) return false;
    }
  }
  GroupElement ha = tbe::dec(pp.group, a.td.cmp, tag_for(pp, a.ct.vk),
                             a.ct.cmp_ct, rng);
  GroupElement hb = tbe::dec(pp.group, b.td.cmp, tag_for(pp, b.ct.vk),
                             b.ct.cmp_ct, rng);
  return ha == hb;
}

Bytes ciphertext_to_bytes(const PublicParams& pp, const Ciphertext& ct) {
  Bytes out;
  append(out, as_bytes(kCiphertextMagic));
  append_u32be(out, static_cast<std::uint32_t>(ct.vk.digests.size()));
  append(out, ct.vk.digests);
  Bytes pt_bytes = tbe::ciphertext_to_bytes(pp.group, ct.pt_ct);
  append_u32be(out, static_cast<std::uint32_t>(pt_bytes.size()));
  append(out, pt_bytes);
  Bytes cmp_bytes = tbe::ciphertext_to_bytes(pp.group, ct.cmp_ct);
  append_u32be(out, static_cast<std::uint32_t>(cmp_bytes.size()));
  append(out, cmp_bytes);
  append_u32be(out, static_cast<std::uint32_t>(ct.sig.preimages.size()));
  append(out, ct.sig.preimages);
  return out;
}

Ciphertext ciphertext_from_bytes(const PublicParams& pp, ByteView data) {
  ByteReader r(data);
  r.expect(as_bytes(kCiphertextMagic), "ciphertext magic");
  Ciphertext ct;
  std::uint32_t vk_len = r.u32be();
  if (vk_len != ots::kKeyBytes) throw ParseError("bad verify-key length");
  ByteView vk = r.take(vk_len);
  ct.vk.digests.assign(vk.begin(), vk.end());
  const std::size_t branch_len = 5 * pp.group.element_size();
  for (tbe::Ciphertext* branch : {&ct.pt_ct, &ct.cmp_ct}) {
    std::uint32_t len = r.u32be();
    if (len != branch_len) throw ParseError("bad branch length");
    *branch = tbe::ciphertext_from_bytes(pp.group, r.take(len));
  }
  std::uint32_t sig_len = r.u32be();
  if (sig_len != ots::kSignatureBytes) throw ParseError("bad signature length");
  ByteView sig = r.take(sig_len);
  ct.sig.preimages.assign(sig.begin(), sig.end());
  r.finish();
  return ct;
}

}  // namespace pkeet
