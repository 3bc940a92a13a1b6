# Copyright 2026 The pkeet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Public-key encryption with equality test.

Encrypt under anyone's public key; holders of a user's trapdoor can check
whether two ciphertexts (possibly under different keys) hide the same
message, without learning the message itself.
"""

from ._pkeet import (
    Ciphertext,
    DecKey,
    EncKey,
    ParseError,
    PublicParams,
    Trapdoor,
    decrypt,
    encrypt,
    keygen,
    setup,
    test_equality,
    tiny_test_params,
    trapdoor,
)

__all__ = [
    "Ciphertext",
    "DecKey",
    "EncKey",
    "ParseError",
    "PublicParams",
    "Trapdoor",
    "decrypt",
    "encrypt",
    "keygen",
    "setup",
    "test_equality",
    "tiny_test_params",
    "trapdoor",
]

__version__ = "0.1.0"
