"""Quantified property suites, shared by the ``verify`` command and the test suite."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .dihedral import (
    DihedralSpec,
    FoldingBasis,
    LinearCode,
    bch_dihedral_generator,
    binary_bch_generator,
    binary_condition,
    char2_containment,
    code_from_generator,
    conjugate_generator,
    conjugate_generator_by_swap,
    coset_condition,
    dimension_lower_bound,
    dual_code,
    find_dual_generator,
    fold,
    folding_basis,
    is_dihedral_invariant,
    make_spec,
    root_power_condition,
    unfold,
    verify_dual_relations,
)
from .distance import (
    bch_lower_bound,
    min_distance_bz,
    min_distance_exhaustive,
    minimum_distance,
)
from .errors import DegenerateGenerator
from .polynomial import (
    Polynomial,
    mulmod,
    polynomial_from_roots,
    root_context,
    substitute_power,
)


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: checked={self.checked} failures={len(self.failures)}"
        if self.skipped:
            line += f" skipped={self.skipped}"
        return line


# -- random specs ------------------------------------------------------------------


def random_generator(rng: random.Random, basis: FoldingBasis, m: int) -> Polynomial:
    """A random generator of one of three kinds: BCH-type, root-prescribed, or unstructured."""
    E = basis.ext
    q = basis.q
    kind = rng.randrange(3)
    if kind == 0:
        for _ in range(20):
            try:
                delta = rng.randint(2, max(2, min(m, 6)))
                return bch_dihedral_generator(q, m, rng.randrange(m), delta, basis=basis).generator
            except DegenerateGenerator:
                continue
    if kind <= 1:
        ctx = root_context(E, m)
        reps = ctx.cosets.representatives
        chosen = [r for r in reps if rng.random() < 0.35]
        unit = Polynomial(E, [rng.randrange(1, E.order)] + [rng.randrange(E.order) for _ in range(rng.randrange(3))])
        return polynomial_from_roots(ctx, chosen) * unit
    deg = rng.randrange(m)
    return Polynomial(E, [rng.randrange(E.order) for _ in range(deg)] + [rng.randrange(1, E.order)])


def random_spec(rng: random.Random, q: int, m_choices) -> DihedralSpec:
    basis = folding_basis(q)
    while True:
        m = rng.choice(m_choices)
        spec = make_spec(q, m, random_generator(rng, basis, m), basis=basis)
        if not spec.generator.is_zero():
            return spec


def _coprime_range(q: int, lo: int, hi: int) -> list[int]:
    return [m for m in range(lo, hi + 1) if math.gcd(m, q) == 1]


# -- suites ------------------------------------------------------------------------


def binary_equivalence(m_max: int = 201, m_min: int = 3) -> PropertyResult:
    """(a) <=> (b) <=> (c) for odd m, and (c) <=> (d) for prime m."""
    res = PropertyResult("binary-equivalence")
    primes_with_d = []
    for m in range(m_min | 1, m_max + 1, 2):
        if m < 3:
            continue
        rep = binary_condition(m)
        a, b, c = root_power_condition(m), coset_condition(m), rep.holds
        res.checked += 1
        if not a == b == c:
            res.fail(f"m={m}: (a)={a} (b)={b} (c)={c}")
        if rep.is_prime:
            d = rep.s2 % 4 == 2
            if d != c:
                res.fail(f"m={m}: (c)={c} but (d)={d}")
            if d and m < 50:
                primes_with_d.append(m)
    res.notes.append("primes below 50 with s2(m) = 2 mod 4: " + "{" + ", ".join(map(str, primes_with_d)) + "}")
    res.primes_below_50 = primes_with_d
    return res


def bch_soundness(count: int = 300, seed: int = 1) -> PropertyResult:
    """exact d >= bch_lower_bound over random specs (q in {2, 3}, gcd(m, q) = 1, m <= 35)."""
    rng = random.Random(seed)
    res = PropertyResult("bch-soundness")
    m_by_q = {2: _coprime_range(2, 3, 35), 3: _coprime_range(3, 3, 35)}
    tight = 0
    while res.checked + res.skipped < count:
        q = rng.choice((2, 3))
        spec = random_spec(rng, q, m_by_q[q])
        C = code_from_generator(spec)
        if C.k == 0:
            res.skipped += 1
            continue
        bound = bch_lower_bound(spec)
        dist = minimum_distance(C, method="bz")
        res.checked += 1
        if not dist.exact:
            res.fail(f"{spec}: distance not certified")
        elif dist.d < bound:
            res.fail(f"{spec}: d={dist.d} < bch bound {bound}")
        tight += dist.d == bound
    res.notes.append(f"bound attained exactly in {tight} cases")
    return res


BINARY_SOUNDNESS_M = (3, 11, 19, 33, 43)


def binary_soundness(ms=BINARY_SOUNDNESS_M, delta_max: int = 6) -> PropertyResult:
    """Certified d >= delta and k >= m - deg p for every binary BCH-dihedral generator."""
    res = PropertyResult("binary-soundness")
    for m in ms:
        seen: dict = {}
        for delta in range(2, min(delta_max, m) + 1):
            for b in range(m):
                try:
                    spec = binary_bch_generator(m, b, delta)
                except DegenerateGenerator:
                    res.skipped += 1
                    continue
                key = spec.generator.coeffs
                res.checked += 1
                if key in seen and seen[key] >= delta:
                    continue
                C = code_from_generator(spec)
                if C.k < m - spec.generator.degree:
                    res.fail(f"m={m} b={b} delta={delta}: k={C.k} < m - deg p")
                pbar = conjugate_generator(spec)
                if not (pbar % spec.generator).is_zero() and not pbar.is_zero():
                    res.fail(f"m={m} b={b} delta={delta}: p does not divide pbar(x^(m-1))")
                dist = min_distance_bz(C, target=delta)
                if dist.lower_bound < delta:
                    res.fail(f"m={m} b={b} delta={delta}: certified lower bound {dist.lower_bound}")
                seen[key] = max(seen.get(key, 0), delta)
    return res


ConjugateFn = Callable[[FoldingBasis, int], int]


def _formula(basis: FoldingBasis, tau: int) -> int:
    return basis.conjugate(tau)


def sign_flipped_conjugate(basis: FoldingBasis, tau: int) -> int:
    """Deliberately wrong L(tau) with the sign of the Frobenius term flipped (mutation canary)."""
    E = basis.ext
    c_frob, c_lin = basis._coefficients
    return E.add(E.neg(E.mul(c_frob, E.pow(tau, basis.q))), E.mul(c_lin, tau))


def conjugation_exhaustive(qs=(2, 3, 4, 5), conjugate: ConjugateFn = _formula) -> PropertyResult:
    """L(tau) equals the coefficient swap, is an involution and is F_q-linear, on all of F_{q^2}."""
    res = PropertyResult("conjugation")
    for q in qs:
        basis = folding_basis(q)
        E = basis.ext
        L = [conjugate(basis, t) for t in range(E.order)]
        for t in range(E.order):
            res.checked += 1
            if L[t] != basis.swap(t):
                res.fail(f"q={q}: L({E.format(t)}) != swap")
            if L[L[t]] != t:
                res.fail(f"q={q}: L is not an involution at {E.format(t)}")
            for c in range(q):
                ce = basis.to_ext[c]
                if L[E.mul(ce, t)] != E.mul(ce, L[t]):
                    res.fail(f"q={q}: L not F_q-homogeneous at {E.format(t)}")
                    break
        rng = random.Random(q)
        for _ in range(200):
            s, t = rng.randrange(E.order), rng.randrange(E.order)
            if L[E.add(s, t)] != E.add(L[s], L[t]):
                res.fail(f"q={q}: L not additive")
                break
    return res


def structure(count: int = 200, seed: int = 2, qs=(2, 3, 4, 5), m_max: int = 15,
              conjugate: ConjugateFn = _formula) -> PropertyResult:
    """Structural invariants over random specs, plus exhaustive checks of the conjugation."""
    rng = random.Random(seed)
    nrng = np.random.default_rng(seed)
    res = PropertyResult("structure")
    conj = conjugation_exhaustive(qs, conjugate)
    res.checked += conj.checked
    res.failures += conj.failures
    for i in range(count):
        q = qs[i % len(qs)]
        spec = random_spec(rng, q, _coprime_range(q, 3, m_max))
        basis, m = spec.basis, spec.m
        res.checked += 1
        tag = repr(spec)
        pbar = conjugate_generator(spec)
        if pbar != conjugate_generator_by_swap(spec):
            res.fail(f"{tag}: formula and swap disagree")
        if spec.with_generator(pbar).generator and conjugate_generator(spec.with_generator(pbar)) != spec.generator:
            res.fail(f"{tag}: conjugation of generators is not an involution")
        if q == 2:
            alt = substitute_power(spec.generator, (m - 1) // 2, m)
            alt = mulmod(alt, alt, m) * basis.alpha
            if alt != pbar:
                res.fail(f"{tag}: binary shortcut alpha*p(x^((m-1)/2))^2 disagrees")
        C = code_from_generator(spec)
        if not is_dihedral_invariant(C):
            res.fail(f"{tag}: code not dihedral-invariant")
        D = dual_code(C)
        if not is_dihedral_invariant(D):
            res.fail(f"{tag}: dual not dihedral-invariant")
        if C.k < dimension_lower_bound(spec):
            res.fail(f"{tag}: k={C.k} below the dimension bound")
        if basis.base.characteristic == 2 and not char2_containment(spec):
            res.fail(f"{tag}: characteristic-2 containment fails")
        if i % 10 == 0:
            dual_spec = find_dual_generator(spec, seed=i)
            if not verify_dual_relations(spec, dual_spec.generator):
                res.fail(f"{tag}: dual generator violates the * relations")
        v = nrng.integers(0, q, size=(5, 2 * m))
        w = nrng.integers(0, basis.ext.order, size=(5, m))
        if not (np.array_equal(unfold(fold(v, basis), basis), v) and np.array_equal(fold(unfold(w, basis), basis), w)):
            res.fail(f"{tag}: fold/unfold roundtrip")
    return res


def distance_oracle(count: int = 100, seed: int = 3, n_max: int = 40, k_max: int = 16) -> PropertyResult:
    """Exhaustive enumeration and Brouwer-Zimmermann agree on random binary codes."""
    from .finite_field import make_field

    F2 = make_field(2)
    rng = np.random.default_rng(seed)
    res = PropertyResult("distance-oracle")
    while res.checked < count:
        k = int(rng.integers(1, k_max + 1))
        n = int(rng.integers(k, n_max + 1))
        density = rng.uniform(0.1, 0.6)
        G = (rng.random((k, n)) < density).astype(np.int64)
        C = LinearCode.from_rows(F2, G)
        if C.k == 0:
            continue
        ex = min_distance_exhaustive(C)
        bz = min_distance_bz(C)
        res.checked += 1
        if ex.d != bz.d or not bz.exact:
            res.fail(f"n={n} k={C.k}: exhaustive d={ex.d}, bz d={bz.d} exact={bz.exact}")
        for r in (ex, bz):
            if not C.contains(r.witness) or int(np.count_nonzero(r.witness)) != r.d:
                res.fail(f"n={n} k={C.k}: invalid witness from {r.method}")
    return res


SUITES = {
    "binary-equivalence": binary_equivalence,
    "bch-soundness": bch_soundness,
    "binary-soundness": binary_soundness,
    "structure": structure,
    "distance-oracle": distance_oracle,
}
