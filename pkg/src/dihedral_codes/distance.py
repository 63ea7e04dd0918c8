"""Minimum distance: exhaustive enumeration, Brouwer-Zimmermann, sampling, BCH bound.

Binary codes are bit-packed into uint64 words and enumerated by numba kernels;
other fields use digit arrays with add/mul tables.  Enumeration ranges split into
shards over the first combination index; the merged result does not depend on
the number of shards (ties go to the earliest codeword in enumeration order).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numba
import numpy as np

from . import linalg
from .dihedral import DihedralSpec, LinearCode, _conjugate_any, _require_coprime
from .errors import DimensionExceedsCap, EmptyCode, ZeroGenerator
from .polynomial import RootContext, root_context, roots_among_powers

DEFAULT_EXHAUSTIVE_CAP = 28


@dataclass(frozen=True)
class DistanceResult:
    d: int
    witness: np.ndarray = field(repr=False)
    method: str
    work: int
    lower_certified: bool
    upper_certified: bool
    lower_bound: int = 0

    @property
    def exact(self) -> bool:
        return self.lower_certified and self.upper_certified

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "method": self.method,
            "work": self.work,
            "lower_bound": self.lower_bound,
            "lower_certified": self.lower_certified,
            "upper_certified": self.upper_certified,
        }


# -- BCH bound -------------------------------------------------------------------


def longest_cyclic_run(exponents, m: int) -> int:
    s = set(e % m for e in exponents)
    if len(s) == m:
        return m
    best = 0
    for start in s:
        if (start - 1) % m in s:
            continue
        length = 0
        while (start + length) % m in s:
            length += 1
        best = max(best, length)
    return best


def common_roots(spec: DihedralSpec, ctx: RootContext | None = None) -> frozenset[int]:
    ctx = ctx or root_context(spec.basis.ext, spec.m)
    pbar = _conjugate_any(spec)
    return roots_among_powers(spec.generator, ctx) & roots_among_powers(pbar, ctx)


def bch_lower_bound(spec: DihedralSpec, ctx: RootContext | None = None) -> int:
    """1 + the longest cyclic run of exponents i with omega^i a root of p and pbar(x^{m-1})."""
    _require_coprime(spec)
    if spec.generator.is_zero():
        raise ZeroGenerator("zero generator")
    return longest_cyclic_run(common_roots(spec, ctx), spec.m) + 1


# -- numba kernels ---------------------------------------------------------------

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@numba.njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return (x * _H01) >> np.uint64(56)


@numba.njit(cache=True, nogil=True)
def _combos_binary(rows, w, lo, hi, best):
    """Min weight over XORs of w distinct rows, first index in [lo, hi).

    Returns (weight, indices, count); weight == best and indices all -1 when
    nothing strictly lighter than ``best`` was met.
    """
    k, W = rows.shape
    idx = np.empty(w, np.int64)
    best_idx = np.full(w, -1, np.int64)
    partial = np.zeros((w + 1, W), np.uint64)
    count = 0
    top = min(hi - 1, k - w)
    depth = 0
    idx[0] = lo - 1
    while depth >= 0:
        idx[depth] += 1
        limit = top if depth == 0 else k - w + depth
        if idx[depth] > limit:
            depth -= 1
            continue
        r = idx[depth]
        for t in range(W):
            partial[depth + 1, t] = partial[depth, t] ^ rows[r, t]
        if depth == w - 1:
            count += 1
            wt = 0
            for t in range(W):
                wt += _popcount(partial[w, t])
            if wt < best:
                best = wt
                for i in range(w):
                    best_idx[i] = idx[i]
        else:
            depth += 1
            idx[depth] = idx[depth - 1]
    return best, best_idx, count


@numba.njit(cache=True, nogil=True)
def _gray_binary(rows, start, stop, best):
    """Walk the reflected Gray code from index start to stop-1 (start >= 1)."""
    k, W = rows.shape
    cur = np.zeros(W, np.uint64)
    g = start ^ (start >> 1)
    for i in range(k):
        if (g >> i) & 1:
            for t in range(W):
                cur[t] ^= rows[i, t]
    best_state = -1
    for s in range(start, stop):
        if s > start:
            # step s flips the bit at the lowest set position of s
            bit = 0
            v = s
            while (v & 1) == 0:
                v >>= 1
                bit += 1
            for t in range(W):
                cur[t] ^= rows[bit, t]
        wt = 0
        for t in range(W):
            wt += _popcount(cur[t])
        if wt < best:
            best = wt
            best_state = s
    return best, best_state


@numba.njit(cache=True, nogil=True)
def _combos_qary(rows, w, lo, hi, best, add, mul):
    """q-ary version of _combos_binary: sums c_1 r_{i1} + ... with c_1 = 1, c_j != 0."""
    k, n = rows.shape
    q = add.shape[0]
    idx = np.empty(w, np.int64)
    coef = np.ones(w, np.int64)
    best_idx = np.full(w, -1, np.int64)
    best_coef = np.zeros(w, np.int64)
    partial = np.zeros((w + 1, n), np.int64)
    count = 0
    top = min(hi - 1, k - w)
    depth = 0
    idx[0] = lo - 1
    coef[0] = q - 1
    while depth >= 0:
        # advance coefficient first, then the index
        cmax = 1 if depth == 0 else q - 1
        if coef[depth] < cmax:
            coef[depth] += 1
        else:
            coef[depth] = 1
            idx[depth] += 1
            limit = top if depth == 0 else k - w + depth
            if idx[depth] > limit:
                depth -= 1
                continue
        r = idx[depth]
        c = coef[depth]
        for t in range(n):
            partial[depth + 1, t] = add[partial[depth, t], mul[c, rows[r, t]]]
        if depth == w - 1:
            count += 1
            wt = 0
            for t in range(n):
                if partial[w, t] != 0:
                    wt += 1
            if wt < best:
                best = wt
                for i in range(w):
                    best_idx[i] = idx[i]
                    best_coef[i] = coef[i]
        else:
            depth += 1
            idx[depth] = idx[depth - 1]
            coef[depth] = q - 1
    return best, best_idx, best_coef, count


# -- helpers -----------------------------------------------------------------------


def pack_rows(M: np.ndarray) -> np.ndarray:
    """Binary matrix -> uint64 words, bit j of word t is column 64 t + j."""
    M = np.asarray(M, dtype=np.uint64)
    k, n = M.shape
    W = max(1, -(-n // 64))
    out = np.zeros((k, W), dtype=np.uint64)
    for j in range(n):
        out[:, j // 64] |= M[:, j] << np.uint64(j % 64)
    return out


def _shard_bounds(total: int, shards: int) -> list[tuple[int, int]]:
    shards = max(1, min(shards, total))
    edges = [round(i * total / shards) for i in range(shards + 1)]
    return [(edges[i], edges[i + 1]) for i in range(shards) if edges[i] < edges[i + 1]]


def _run(tasks, workers: int):
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda f: f(), tasks))
    return [f() for f in tasks]


def combination_count(k: int, w: int, q: int) -> int:
    return math.comb(k, w) * (q - 1) ** (w - 1)


class _Enumerator:
    """Min-weight search over combinations of rows of one generator matrix."""

    def __init__(self, F, G: np.ndarray, shards: int = 1, workers: int = 1):
        self.F = F
        self.G = np.ascontiguousarray(G, dtype=np.int64)
        self.k = G.shape[0]
        self.shards = shards
        self.workers = workers
        if F.order == 2:
            self.packed = pack_rows(G)
        else:
            t = linalg.field_tables(F)
            self.add = np.ascontiguousarray(t.add)
            self.mul = np.ascontiguousarray(t.mul)

    def search(self, w: int, best: int):
        """Returns (weight, codeword or None, count) for info weight exactly w."""
        k = self.k
        bounds = _shard_bounds(k - w + 1, self.shards)
        if self.F.order == 2:
            tasks = [lambda lo=lo, hi=hi: _combos_binary(self.packed, w, lo, hi, best) for lo, hi in bounds]
        else:
            tasks = [
                lambda lo=lo, hi=hi: _combos_qary(self.G, w, lo, hi, best, self.add, self.mul)
                for lo, hi in bounds
            ]
        results = _run(tasks, self.workers)
        count = sum(int(r[-1]) for r in results)
        top, word = best, None
        for r in results:
            if r[0] < top:
                top = int(r[0])
                coeffs = np.zeros(k, dtype=np.int64)
                coeffs[r[1]] = 1 if self.F.order == 2 else r[2]
                word = linalg.matmul(self.F, coeffs[None, :], self.G)[0]
        return top, word, count


# -- exact methods -----------------------------------------------------------------


def min_distance_exhaustive(
    C: LinearCode, cap: int = DEFAULT_EXHAUSTIVE_CAP, shards: int = 1, workers: int = 1
) -> DistanceResult:
    """Exact d by visiting every nonzero codeword (up to scalars when q > 2)."""
    k, n, q = C.k, C.length, C.q
    if k == 0:
        raise EmptyCode("the zero code has no minimum distance")
    if k * math.log2(q) > cap:
        raise DimensionExceedsCap(f"k = {k} over F_{q} exceeds the exhaustive cap {cap}")
    G = C.gen_matrix
    if q == 2:
        packed = pack_rows(G)
        total = 1 << k
        bounds = _shard_bounds(total - 1, shards)
        tasks = [lambda lo=lo, hi=hi: _gray_binary(packed, lo + 1, hi + 1, n + 1) for lo, hi in bounds]
        best, state = n + 1, -1
        for wt, s in _run(tasks, workers):
            if wt < best:
                best, state = int(wt), int(s)
        g = state ^ (state >> 1)
        u = np.array([(g >> i) & 1 for i in range(k)], dtype=np.int64)
        witness = linalg.matmul(C.base_field, u[None, :], G)[0]
        return DistanceResult(best, witness, "exhaustive", total - 1, True, True, best)
    enum = _Enumerator(C.base_field, G, shards, workers)
    best, witness, work = n + 1, None, 0
    for w in range(1, k + 1):
        wt, word, count = enum.search(w, best)
        work += count
        if word is not None:
            best, witness = wt, word
    return DistanceResult(best, witness, "exhaustive", work, True, True, best)


@dataclass(frozen=True)
class InformationSet:
    matrix: np.ndarray  # generator matrix, identity on ``pivots``
    pivots: tuple[int, ...]
    fresh_rank: int  # pivots not shared with earlier sets


def information_sets(C: LinearCode) -> list[InformationSet]:
    """Disjoint information sets taken left to right; a rank-deficient block
    borrows pivots from columns already used by earlier sets."""
    F, G, n = C.base_field, C.gen_matrix, C.length
    fresh = list(range(n))
    used: list[int] = []
    sets = []
    while fresh:
        order = fresh + used
        R, piv = linalg.rref(F, G[:, order])
        pivots = [order[i] for i in piv]
        fresh_piv = [c for c in pivots if c in set(fresh)]
        if not fresh_piv:
            break
        M = np.zeros_like(R)
        M[:, order] = R
        sets.append(InformationSet(M, tuple(pivots), len(fresh_piv)))
        used += fresh_piv
        fresh = [c for c in fresh if c not in set(fresh_piv)]
    return sets


def _lower_envelope(sets, levels, k) -> int:
    return sum(max(0, lv + 1 - (k - s.fresh_rank)) for s, lv in zip(sets, levels))


def min_distance_bz(
    C: LinearCode,
    budget: int | None = None,
    target: int | None = None,
    shards: int = 1,
    workers: int = 1,
) -> DistanceResult:
    """Brouwer-Zimmermann minimum-weight computation.

    ``budget`` caps the number of enumerated combinations; ``target`` stops as
    soon as the lower bound reaches it (enough to certify d >= target).  If
    either stop triggers before the bounds meet, the result carries
    ``lower_certified=False`` and the best lower bound found.
    """
    k, n, q = C.k, C.length, C.q
    if k == 0:
        raise EmptyCode("the zero code has no minimum distance")
    sets = information_sets(C)
    enums = [_Enumerator(C.base_field, s.matrix, shards, workers) for s in sets]
    levels = [0] * len(sets)
    best, witness, work = n + 1, None, 0

    def result(certified: bool) -> DistanceResult:
        lower = min(_lower_envelope(sets, levels, k), best)
        return DistanceResult(best, witness, "brouwer_zimmermann", work, certified, True, lower)

    for w in range(1, k + 1):
        for j, s in enumerate(sets):
            if w + 1 - (k - s.fresh_rank) <= 0:
                continue
            cost = combination_count(k, w, q)
            if budget is not None and work + cost > budget:
                return result(False)
            wt, word, count = enums[j].search(w, best)
            work += count
            if word is not None:
                best, witness = wt, word
            levels[j] = w
            lower = _lower_envelope(sets, levels, k)
            if lower >= best:
                return result(True)
            if target is not None and lower >= target:
                return result(False)
    # every codeword has been seen
    return result(True)


def weight_upper_bound_sample(C: LinearCode, trials: int, seed: int = 0) -> int:
    """Least weight among ``trials`` random nonzero codewords (reproducible per seed)."""
    if C.k == 0:
        raise EmptyCode("the zero code has no minimum distance")
    rng = np.random.default_rng(seed)
    F, q, k = C.base_field, C.q, C.k
    best = C.length
    done = 0
    while done < trials:
        batch = min(4096, trials - done)
        U = rng.integers(0, q, size=(batch, k))
        zero = ~U.any(axis=1)
        while zero.any():
            U[zero] = rng.integers(0, q, size=(int(zero.sum()), k))
            zero = ~U.any(axis=1)
        words = linalg.matmul(F, U, C.gen_matrix)
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
        done += batch
    return best


def minimum_distance(
    C: LinearCode, method: str = "auto", cap: int = DEFAULT_EXHAUSTIVE_CAP, **kwargs
) -> DistanceResult:
    """Dispatch on ``method`` in {auto, exhaustive, bz}."""
    if method == "auto":
        method = "exhaustive" if C.k * math.log2(C.q) <= cap else "bz"
    if method == "exhaustive":
        return min_distance_exhaustive(C, cap=cap, **kwargs)
    if method in ("bz", "brouwer_zimmermann"):
        return min_distance_bz(C, **kwargs)
    raise ValueError(f"unknown distance method {method!r}")
