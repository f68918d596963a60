#!/usr/bin/env python3
"""Reference oracle for hash-to-scalar and scalar arithmetic test vectors.

Implements the protocol's scalar derivation independently of the C++ code:
SHA-512 over a domain-tagged message, reduced little-endian modulo the
ristretto255 group order, printed as 32-byte big-endian hex.
"""
import hashlib

L = 2**252 + 27742317777372353535851937790883648493


def h2s(msg: bytes) -> int:
    digest = hashlib.sha512(b"atlantis/h2s" + msg).digest()
    return int.from_bytes(digest, "little") % L


def be(x: int) -> str:
    return x.to_bytes(32, "big").hex()


if __name__ == "__main__":
    print("// hashToScalar vectors (32-byte big-endian hex)")
    for m in [b"", b"a", b"b", b"abc", b"atlantis"]:
        print(f'  {{"{m.decode()}", "{be(h2s(m))}"}},')
    print("// scalar arithmetic vectors: a, b, a+b, a*b, -a (mod group order)")
    pairs = [(1, 1), (2, 3), (L - 1, 1), (L - 1, L - 1),
             (0x1234567890ABCDEF, 0xFEDCBA0987654321),
             (h2s(b"x"), h2s(b"y"))]
    for a, b_ in pairs:
        print(f'  {{"{be(a)}", "{be(b_)}", "{be((a + b_) % L)}", "{be((a * b_) % L)}", "{be((-a) % L)}"}},')
