# Copyright 2026 The pkeet Authors
# SPDX-License-Identifier: Apache-2.0
"""Recomputes every frozen constant asserted by the C++ tests, from scratch.

Pure python + hashlib, no project code: an independent check that the pinned
expected values in the test suite are what the definitions say they are.
Run directly; exits nonzero on the first mismatch.
"""

import hashlib
import sys

FAILURES = []


def check(name, got, want):
    if got != want:
        FAILURES.append(f"{name}: got {got!r}, want {want!r}")


def sha256(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


# --- tiny group: subgroup of quadratic residues mod the safe prime 23 -------

P, Q, G = 23, 11, 2

qr = sorted({pow(x, 2, P) for x in range(1, P)})
check("qr-set", qr, [1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18])


def encode(m):
    assert 1 <= m <= Q
    return m if pow(m, (P - 1) // 2, P) == 1 else P - m


def decode(e):
    return e if e <= Q else P - e


check("encode-3", encode(3), 3)
check("encode-5", encode(5), 18)
check("decode-18", decode(18), 5)
for m in range(1, Q + 1):
    check(f"roundtrip-{m}", decode(encode(m)), m)

check("mul-3-16", 3 * 16 % P, 2)
check("inv-16", pow(16, -1, P), 13)
check("exp-2-3", pow(2, 3, P), 8)
check("exp-8-3", pow(8, 3, P), 6)
check("scalar-inv-4", pow(4, -1, Q), 3)

# --- domain-separated hashing ------------------------------------------------


def h2s(data: bytes, q: int) -> int:
    return int.from_bytes(sha256(b"PKEET/H2S:" + data), "big") % q


def h2g(data: bytes, q: int, g: int, p: int) -> int:
    return pow(g, int.from_bytes(sha256(b"PKEET/H2G:" + data), "big") % q, p)


check("h2s-abc", h2s(b"abc", Q), 8)
check("h2g-abc", h2g(b"abc", Q, G, P), 9)

# --- tag-based encryption worked vector --------------------------------------
# Keys from exponents (g1, x1, x2, y1, y2) = (2, 3, 4, 5, 2).

g1, x1, x2, y1, y2 = 2, 3, 4, 5, 2
z = pow(g1, x1, P)
g2 = pow(z, pow(x2, -1, Q), P)
u1 = pow(g1, y1, P)
u2 = pow(g2, y2, P)
check("tbe-key", (z, g2, u1, u2), (8, 6, 9, 13))

tag, r1, r2, pt = 7, 2, 3, 3
c1 = pow(g1, r1, P)
c2 = pow(g2, r2, P)
d1 = pow(pow(z, tag, P) * u1 % P, r1, P)
d2 = pow(pow(z, tag, P) * u2 % P, r2, P)
e = pt * pow(z, r1 + r2, P) % P
check("tbe-enc", (c1, c2, d1, d2, e), (4, 9, 3, 13, 2))

for s1 in range(1, Q):
    for s2 in range(1, Q):
        e1 = (x1 + s1 * (tag * x1 + y1)) % Q
        e2 = (x2 + s2 * (tag * x2 + y2)) % Q
        num = pow(c1, e1, P) * pow(c2, e2, P) % P
        den = pow(d1, s1, P) * pow(d2, s2, P) % P
        k = num * pow(den, -1, P) % P
        check(f"tbe-dec-{s1}-{s2}", e * pow(k, -1, P) % P, pt)

# --- one-time signature deterministic vector ---------------------------------
# Signing key entry [b][i] has bytes (b*131 + i*7 + j) % 256 for j in 0..31;
# digest bits are taken MSB-first.

sk = [[bytes((b * 131 + i * 7 + j) % 256 for j in range(32)) for i in range(256)]
      for b in range(2)]
vk = b"".join(sha256(sk[b][i]) for b in range(2) for i in range(256))
check("ots-vk-digest", sha256(vk).hex(),
      "4ec85d493a17bfe90231916d40587eea38e7b0c1d0778ccbdf3d9d7a4bb3cc23")

msg = b"equality-test vector"
md = sha256(msg)
sig = b"".join(sk[(md[i // 8] >> (7 - i % 8)) & 1][i] for i in range(256))
check("ots-sig-digest", sha256(sig).hex(),
      "5a4ae2d8acf7bc9c9ff433728e3e2e2064f872ca80e8f7bccaaf83412c1d0d90")

ok = all(
    sha256(sig[32 * i:32 * (i + 1)])
    == vk[32 * (((md[i // 8] >> (7 - i % 8)) & 1) * 256 + i):]
          [:32]
    for i in range(256)
)
check("ots-verify", ok, True)

# --- deterministic byte stream ------------------------------------------------
# key = SHA-256("PKEET/RNG:" || BE64(seed)); block i = SHA-256(key || BE64(i)).

key = sha256(b"PKEET/RNG:" + (42).to_bytes(8, "big"))
stream = sha256(key + (0).to_bytes(8, "big"))
check("rng-seed42-first16", stream[:16].hex(), "6e7da092574903c4a6d3daaa4578908e")

if FAILURES:
    print("FAIL")
    for f in FAILURES:
        print("  " + f)
    sys.exit(1)
print(f"ok: all frozen vectors recomputed ({Q * Q - 2 * Q + 1} dec cases included)")
