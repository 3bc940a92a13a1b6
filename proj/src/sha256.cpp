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

#include "pkeet/sha256.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace pkeet {

namespace {

Digest32 sha256_chunks(std::span<const ByteView> chunks) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 init failed");
  }
  for (ByteView chunk : chunks) {
    if (EVP_DigestUpdate(ctx.get(), chunk.data(), chunk.size()) != 1) {
      throw std::runtime_error("sha256 update failed");
    }
  }
  Digest32 out{};
  unsigned len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != 32) {
    throw std::runtime_error("sha256 final failed");
  }
  return out;
}

}  // namespace

Digest32 sha256(ByteView data) {
  return sha256_chunks({&data, 1});
}

Digest32 sha256(std::initializer_list<ByteView> chunks) {
  return sha256_chunks({chunks.begin(), chunks.size()});
}

}  // namespace pkeet
