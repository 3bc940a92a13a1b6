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

#include "pkeet/io.hpp"

#include <fstream>

namespace pkeet::io {

namespace g = pkeet::group;

namespace {

constexpr std::string_view kParamsMagic = "PKEETPP";
constexpr std::string_view kEncKeyMagic = "PKEETEK";
constexpr std::string_view kDecKeyMagic = "PKEETDK";
constexpr std::string_view kTrapdoorMagic = "PKEETTD";
constexpr std::uint8_t kFormatVersion = 0x01;
constexpr std::uint32_t kMaxSecurityBits = 65536;

// Minimal big-endian integer, u32-BE length prefixed; zero would encode as
// an empty payload, which parsing rejects (no field here may be zero).
void append_mpz(Bytes& out, const mpz_class& v) {
  std::size_t n = v == 0 ? 0 : (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  append_u32be(out, static_cast<std::uint32_t>(n));
  std::size_t old = out.size();
  out.resize(old + n);
  if (n > 0) {
    std::size_t count = 0;
    mpz_export(out.data() + old, &count, 1, 1, 1, 0, v.get_mpz_t());
  }
}

mpz_class read_mpz(ByteReader& r) {
  std::uint32_t n = r.u32be();
  ByteView data = r.take(n);
  if (data.empty() || data[0] == 0) {
    throw ParseError("integer not in minimal form");
  }
  mpz_class v;
  mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return v;
}

void append_elements(Bytes& out, const GroupParams& params,
                     std::initializer_list<const GroupElement*> elems) {
  for (const GroupElement* e : elems) {
    append(out, g::element_to_bytes(params, *e));
  }
}

tbe::EncKey read_tbe_enc_key(const GroupParams& params, ByteReader& r) {
  const std::size_t w = params.element_size();
  tbe::EncKey ek;
  for (GroupElement* e : {&ek.g1, &ek.g2, &ek.z, &ek.u1, &ek.u2}) {
    *e = g::element_from_bytes(params, r.take(w));
  }
  if (ek.z == g::identity()) throw ParseError("degenerate key: z = 1");
  return ek;
}

tbe::DecKey read_tbe_dec_key(const GroupParams& params, ByteReader& r) {
  const std::size_t w = params.scalar_size();
  tbe::DecKey dk;
  for (Scalar* s : {&dk.x1, &dk.x2, &dk.y1, &dk.y2}) {
    *s = g::scalar_from_bytes(params, r.take(w));
    if (s->value == 0) throw ParseError("zero key scalar");
  }
  return dk;
}

void append_tbe_dec_key(Bytes& out, const GroupParams& params,
                        const tbe::DecKey& dk) {
  for (const Scalar* s : {&dk.x1, &dk.x2, &dk.y1, &dk.y2}) {
    append(out, g::scalar_to_bytes(params, *s));
  }
}

}  // namespace

Bytes params_to_bytes(const PublicParams& pp) {
  Bytes out;
  append(out, as_bytes(kParamsMagic));
  out.push_back(kFormatVersion);
  out.push_back(pp.hash_id);
  append_u32be(out, pp.group.security_bits);
  append_mpz(out, pp.group.modulus);
  append_mpz(out, pp.group.order);
  append_mpz(out, pp.group.generator);
  return out;
}

PublicParams params_from_bytes(ByteView data) {
  ByteReader r(data);
  r.expect(as_bytes(kParamsMagic), "params magic");
  if (r.u8() != kFormatVersion) throw ParseError("unsupported params version");
  PublicParams pp;
  pp.hash_id = r.u8();
  if (pp.hash_id != kHashSha256) throw ParseError("unknown hash identifier");
  std::uint32_t bits = r.u32be();
  if (bits == 0 || bits > kMaxSecurityBits) {
    throw ParseError("implausible security level");
  }
  pp.group.security_bits = bits;
  pp.group.modulus = read_mpz(r);
  pp.group.order = read_mpz(r);
  pp.group.generator = read_mpz(r);
  r.finish();
  if (!g::validate_params(pp.group)) {
    throw ParseError("group parameters fail validation");
  }
  return pp;
}

Bytes enc_key_to_bytes(const PublicParams& pp, const EncKey& ek) {
  Bytes out;
  append(out, as_bytes(kEncKeyMagic));
  out.push_back(kFormatVersion);
  for (const tbe::EncKey* k : {&ek.pt, &ek.cmp}) {
    append_elements(out, pp.group, {&k->g1, &k->g2, &k->z, &k->u1, &k->u2});
  }
  return out;
}

EncKey enc_key_from_bytes(const PublicParams& pp, ByteView data) {
  ByteReader r(data);
  r.expect(as_bytes(kEncKeyMagic), "enc-key magic");
  if (r.u8() != kFormatVersion) throw ParseError("unsupported enc-key version");
  EncKey ek;
  ek.pt = read_tbe_enc_key(pp.group, r);
  ek.cmp = read_tbe_enc_key(pp.group, r);
  r.finish();
  return ek;
}

Bytes dec_key_to_bytes(const PublicParams& pp, const DecKey& dk) {
  Bytes out;
  append(out, as_bytes(kDecKeyMagic));
  out.push_back(kFormatVersion);
  append_tbe_dec_key(out, pp.group, dk.pt);
  append_tbe_dec_key(out, pp.group, dk.cmp);
  return out;
}

DecKey dec_key_from_bytes(const PublicParams& pp, ByteView data) {
  ByteReader r(data);
  r.expect(as_bytes(kDecKeyMagic), "dec-key magic");
  if (r.u8() != kFormatVersion) throw ParseError("unsupported dec-key version");
  DecKey dk;
  dk.pt = read_tbe_dec_key(pp.group, r);
  dk.cmp = read_tbe_dec_key(pp.group, r);
  r.finish();
  return dk;
}

Bytes trapdoor_to_bytes(const PublicParams& pp, const Trapdoor& td) {
  Bytes out;
  append(out, as_bytes(kTrapdoorMagic));
  out.push_back(kFormatVersion);
  append_tbe_dec_key(out, pp.group, td.cmp);
  return out;
}

Trapdoor trapdoor_from_bytes(const PublicParams& pp, ByteView data) {
  ByteReader r(data);
  r.expect(as_bytes(kTrapdoorMagic), "trapdoor magic");
  if (r.u8() != kFormatVersion) throw ParseError("unsupported trapdoor version");
  Trapdoor td;
  td.cmp = read_tbe_dec_key(pp.group, r);
  r.finish();
  return td;
}

Bytes trapdoor_bytes_from_dec_key_bytes(ByteView dk_bytes) {
  ByteReader r(dk_bytes);
  r.expect(as_bytes(kDecKeyMagic), "dec-key magic");
  if (r.u8() != kFormatVersion) throw ParseError("unsupported dec-key version");
  std::size_t payload = r.remaining();
  if (payload == 0 || payload % 8 != 0) {
    throw ParseError("dec-key payload is not eight scalars");
  }
  r.take(payload / 2);  // pt branch
  ByteView cmp = r.take(payload / 2);
  Bytes out;
  append(out, as_bytes(kTrapdoorMagic));
  out.push_back(kFormatVersion);
  append(out, cmp);
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed on " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed on " + path.string());
}

}  // namespace pkeet::io
