"""Dense linear algebra over small finite fields, on numpy arrays of raw values."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .finite_field import FiniteField


@dataclass(frozen=True)
class FieldTables:
    q: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is unused


@lru_cache(maxsize=None)
def field_tables(F: FiniteField) -> FieldTables:
    q = F.order
    add = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    neg = np.array([F.neg(a) for a in range(q)], dtype=np.int64)
    inv = np.array([0] + [F.inv(a) for a in range(1, q)], dtype=np.int64)
    for arr in (add, mul, neg, inv):
        arr.setflags(write=False)
    return FieldTables(q, add, mul, neg, inv)


def _prime(F: FiniteField) -> bool:
    return F.degree == 1


def add(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if F.characteristic == 2:
        return np.bitwise_xor(a, b)
    if _prime(F):
        return (a + b) % F.order
    return field_tables(F).add[a, b]


def sub(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if F.characteristic == 2:
        return np.bitwise_xor(a, b)
    if _prime(F):
        return (a - b) % F.order
    t = field_tables(F)
    return t.add[a, t.neg[b]]


def mul(F: FiniteField, a, b) -> np.ndarray:
    if _prime(F):
        return (np.asarray(a) * np.asarray(b)) % F.order
    return field_tables(F).mul[a, b]


def matmul(F: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.atleast_2d(A)
    B = np.atleast_2d(B)
    if _prime(F):
        return (A @ B) % F.order
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    t = field_tables(F)
    for l in range(A.shape[1]):
        out = add(F, out, t.mul[A[:, l][:, None], B[l, :][None, :]])
    return out


def rref(F: FiniteField, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (zero rows dropped) and the pivot columns."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    rows, cols = R.shape
    inv = field_tables(F).inv
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        if R[r, c] != 1:
            R[r] = mul(F, R[r], inv[R[r, c]])
        factors = R[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = sub(F, R[hit], mul(F, factors[hit][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(F: FiniteField, M: np.ndarray) -> int:
    if np.size(M) == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: FiniteField, M: np.ndarray, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows, in rref) of {v : M v^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1] if M.size else ncols
    if M.size == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(F, M)
    free = [c for c in range(n) if c not in set(pivots)]
    if not free:
        return np.zeros((0, n), dtype=np.int64)
    neg = field_tables(F).neg
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = neg[R[row, f]]
    return rref(F, basis)[0]
