"""Independent reference implementations used as test oracles.

Nothing here calls into dihedral_codes; everything is plain Python or sympy.
"""

from __future__ import annotations

import itertools

import numpy as np
from sympy import GF
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem


def gf2_clmul_mod(a: int, b: int, modulus_bits: int, k: int) -> int:
    """Carry-less product of a and b reduced by the degree-k modulus (bit i = coeff of x^i)."""
    prod = 0
    while b:
        if b & 1:
            prod ^= a
        a <<= 1
        b >>= 1
    for i in range(prod.bit_length() - 1, k - 1, -1):
        if prod >> i & 1:
            prod ^= modulus_bits << (i - k)
    return prod


def digits(v: int, p: int, k: int) -> list[int]:
    return [(v // p**i) % p for i in range(k)]


def sympy_field_mul(a: int, b: int, p: int, modulus_asc) -> int:
    """Multiply two base-p encoded elements of F_p[x]/(modulus) using sympy's galoistools."""
    k = len(modulus_asc) - 1
    dom = GF(p)
    fa = list(reversed(digits(a, p, k)))
    fb = list(reversed(digits(b, p, k)))
    f = [int(c) for c in reversed(modulus_asc)]
    r = gf_rem(gf_mul(fa, fb, p, dom), f, p, dom)
    r = [int(c) % p for c in r]
    return sum(c * p**i for i, c in enumerate(reversed(r)))


def sympy_irreducible(modulus_asc, p: int) -> bool:
    return bool(gf_irreducible_p([int(c) for c in reversed(modulus_asc)], p, GF(p)))


def rank_mod_p(M, p: int) -> int:
    """Gaussian elimination with Python ints over a prime field."""
    A = [list(map(int, row)) for row in np.asarray(M).tolist()]
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] % p), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [(x * inv) % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] % p:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        r += 1
    return r


def brute_force_min_distance_binary(G) -> int:
    """Minimum nonzero weight over all 2^k - 1 messages, by plain numpy."""
    G = np.asarray(G, dtype=np.int64) % 2
    k = G.shape[0]
    best = G.shape[1] + 1
    for bits in itertools.product((0, 1), repeat=k):
        if not any(bits):
            continue
        w = int(((np.array(bits) @ G) % 2).sum())
        best = min(best, w)
    return best


def cyclotomic_cosets_naive(m: int, base: int) -> list[set[int]]:
    out, seen = [], set()
    for i in range(m):
        if i in seen:
            continue
        c = {(i * base**j) % m for j in range(m)}
        seen |= c
        out.append(c)
    return out


def dihedral_left_multiply(v, m: int, g: str):
    """Left multiplication by a (rotation) or b (reflection) in F_q D_{2m}.

    Coordinate 2i + s holds the coefficient of a^i b^s.
    """
    v = np.asarray(v)
    out = np.zeros_like(v)
    for i in range(m):
        for s in (0, 1):
            if g == "a":
                j, t = (i + 1) % m, s
            else:  # b a^i b^s = a^{-i} b^{s+1}
                j, t = (-i) % m, 1 - s
            out[..., 2 * j + t] = v[..., 2 * i + s]
    return out


def multiplicative_order_naive(mul, one, a) -> int:
    x, e = a, 1
    while x != one:
        x = mul(x, a)
        e += 1
    return e
