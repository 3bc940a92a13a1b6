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

#ifndef PKEET_IO_HPP_
#define PKEET_IO_HPP_

#include <filesystem>
#include <string>

#include "pkeet/pkeet.hpp"

namespace pkeet {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

namespace io {

// File formats.  Every format opens with a magic string and a version byte;
// payloads are the canonical encodings under the file's params, so
// serialize(parse(x)) == x byte for byte.
//
//   params    "PKEETPP" 0x01  hash_id  u32be bits
//             then u32be-length-prefixed minimal big-endian P, q, g
//   enc key   "PKEETEK" 0x01  ten elements (pt then cmp branch, each
//             g1 g2 z u1 u2), element_size() bytes apiece
//   dec key   "PKEETDK" 0x01  eight scalars (pt then cmp branch, each
//             x1 x2 y1 y2), scalar_size() bytes apiece
//   trapdoor  "PKEETTD" 0x01  four scalars (cmp branch x1 x2 y1 y2)
//   ciphertext  the canonical "PKEET1" wire bytes, stored as-is
//
// Parsers validate magic, version, structure, and algebraic membership
// (primality for params; subgroup membership for elements; range and
// nonzeroness for key scalars), throwing ParseError on any failure.

Bytes params_to_bytes(const PublicParams& pp);
PublicParams params_from_bytes(ByteView data);

Bytes enc_key_to_bytes(const PublicParams& pp, const EncKey& ek);
EncKey enc_key_from_bytes(const PublicParams& pp, ByteView data);

Bytes dec_key_to_bytes(const PublicParams& pp, const DecKey& dk);
DecKey dec_key_from_bytes(const PublicParams& pp, ByteView data);

Bytes trapdoor_to_bytes(const PublicParams& pp, const Trapdoor& td);
Trapdoor trapdoor_from_bytes(const PublicParams& pp, ByteView data);

// Derives a trapdoor file from a serialized decryption key without params:
// the dec-key payload is eight equal-width scalars, and the trapdoor is the
// cmp-branch half.  Only structural checks are possible here; range checks
// happen when the trapdoor is parsed under params.
Bytes trapdoor_bytes_from_dec_key_bytes(ByteView dk_bytes);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView data);

}  // namespace io
}  // namespace pkeet

#endif  // PKEET_IO_HPP_
