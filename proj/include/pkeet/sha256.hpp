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

#ifndef PKEET_SHA256_HPP_
#define PKEET_SHA256_HPP_

#include <array>
#include <initializer_list>

#include "pkeet/bytes.hpp"

namespace pkeet {

using Digest32 = std::array<std::uint8_t, 32>;

Digest32 sha256(ByteView data);
// Digest of the concatenation of the given chunks, without copying.
Digest32 sha256(std::initializer_list<ByteView> chunks);

}  // namespace pkeet

#endif  // PKEET_SHA256_HPP_
