"""Principal dihedral codes: folding, conjugate generators, BCH-type generators,
duality checks and verification of the dihedral symmetry.

Coordinates of F_q^{2m} follow the group ordering 1, b, a, ab, a^2, a^2 b, ...
(a the rotation, b the reflection), so vector positions 2j and 2j+1 (0-based)
hold the coefficients of a^j and a^j b.  Folding pairs them into the single
coordinate ``v[2j] + v[2j+1] * alpha`` of F_{q^2}^m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import linalg
from .errors import (
    ConditionFails,
    DegenerateGenerator,
    DeltaOutOfRange,
    EvenModulus,
    LengthTooShort,
    NotCharTwo,
    NotCoprime,
    OddLength,
    ParseError,
    PreconditionError,
    ZeroGenerator,
)
from .finite_field import (
    FieldElement,
    FiniteField,
    embedding_table,
    field_of_order,
    is_prime,
    make_field,
)
from .polynomial import (
    Polynomial,
    cyclotomic_cosets,
    format_polynomial,
    minimal_polynomial,
    mulmod,
    order_mod,
    parse_polynomial,
    poly_lcm,
    quotient_reduce,
    root_context,
    shift,
    substitute_power,
)


@dataclass(frozen=True, eq=False)
class FoldingBasis:
    """F_q inside F_{q^2} = F_q[alpha], with the tables needed to fold and unfold."""

    base: FiniteField
    ext: FiniteField
    alpha: int
    to_ext: tuple[int, ...]
    split: tuple[tuple[int, int], ...]

    @property
    def q(self) -> int:
        return self.base.order

    def join(self, a: int, b: int) -> int:
        """a + b*alpha as a raw value of F_{q^2}."""
        E = self.ext
        return E.add(self.to_ext[a], E.mul(self.to_ext[b], self.alpha))

    @cached_property
    def _coefficients(self) -> tuple[int, int]:
        E, a, q = self.ext, self.alpha, self.q
        denom = E.sub(E.pow(a, q), a)
        c_frob = E.div(E.sub(1, E.mul(a, a)), denom)
        c_lin = E.div(E.sub(E.pow(a, q + 1), 1), denom)
        return c_frob, c_lin

    def conjugate(self, tau: int) -> int:
        """L(tau) = c1 * tau^q + c2 * tau, the F_q-linear map a + b alpha -> b + a alpha."""
        E = self.ext
        c_frob, c_lin = self._coefficients
        return E.add(E.mul(c_frob, E.pow(tau, self.q)), E.mul(c_lin, tau))

    def swap(self, tau: int) -> int:
        a, b = self.split[tau]
        return self.join(b, a)

    @cached_property
    def conjugate_table(self) -> tuple[int, ...]:
        return tuple(self.conjugate(v) for v in range(self.ext.order))

    @cached_property
    def split_array(self) -> np.ndarray:
        return np.array(self.split, dtype=np.int64).reshape(-1, 2)

    @cached_property
    def join_array(self) -> np.ndarray:
        q = self.q
        return np.array([[self.join(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)


@lru_cache(maxsize=None)
def folding_basis(q: int, alpha_modulus: tuple[int, ...] | None = None) -> FoldingBasis:
    """The basis {1, alpha} of F_{q^2} over F_q; alpha is the stored generator of F_{q^2}.

    ``alpha_modulus`` optionally fixes the defining polynomial of F_{q^2} over
    its prime field (ascending coefficients).
    """
    base = field_of_order(q)
    p, k = base.characteristic, base.degree
    ext = make_field(p, 2 * k, alpha_modulus)
    to_ext = embedding_table(base, ext)
    alpha = ext.generator
    split = [None] * ext.order
    for a in range(q):
        for b in range(q):
            v = ext.add(to_ext[a], ext.mul(to_ext[b], alpha))
            split[v] = (a, b)
    if any(s is None for s in split):
        raise PreconditionError("alpha does not generate F_{q^2} over F_q")
    return FoldingBasis(base, ext, alpha, tuple(to_ext), tuple(split))


def binary_basis() -> FoldingBasis:
    """F_2 inside F_4 with alpha^2 + alpha + 1 = 0."""
    return folding_basis(2)


# -- folding -------------------------------------------------------------------


def fold(v, basis: FoldingBasis) -> np.ndarray:
    """F_q^{2m} -> F_{q^2}^m, coordinate j = v[2j] + v[2j+1]*alpha."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape[-1] % 2:
        raise OddLength(f"length {v.shape[-1]} is odd")
    pairs = v.reshape(v.shape[:-1] + (-1, 2))
    return basis.join_array[pairs[..., 0], pairs[..., 1]]


def unfold(w, basis: FoldingBasis) -> np.ndarray:
    w = np.asarray(w, dtype=np.int64)
    return basis.split_array[w].reshape(w.shape[:-1] + (-1,))


def conjugate_element(tau: FieldElement, alpha: FieldElement) -> FieldElement:
    """tau = a + b*alpha  ->  b + a*alpha, evaluated through the linearised polynomial."""
    basis = _basis_for_alpha(alpha)
    return tau.field(basis.conjugate(tau.value))


def _basis_for_alpha(alpha: FieldElement) -> FoldingBasis:
    E = alpha.field
    p, k = E.characteristic, E.degree
    if k % 2:
        raise PreconditionError(f"{E} is not a quadratic extension")
    basis = folding_basis(p ** (k // 2), E.modulus)
    if basis.alpha != alpha.value:
        raise PreconditionError("alpha must be the stored generator of its field")
    return basis


# -- specs ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DihedralSpec:
    """A principal D_{2m}-code over F_q given by its generator p(x) in F_{q^2}[x]/(x^m-1)."""

    q: int
    m: int
    basis: FoldingBasis
    generator: Polynomial
    r: int | None
    m_prime: int | None
    principal_guarantee: bool

    @property
    def alpha(self) -> FieldElement:
        return self.basis.ext(self.basis.alpha)

    @property
    def n(self) -> int:
        return 2 * self.m

    @property
    def coprime(self) -> bool:
        return self.r is not None

    def with_generator(self, p: Polynomial) -> DihedralSpec:
        return make_spec(self.q, self.m, p, basis=self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DihedralSpec)
            and (self.q, self.m, self.generator) == (other.q, other.m, other.generator)
            and self.basis.ext == other.basis.ext
        )

    def __hash__(self) -> int:
        return hash((self.q, self.m, self.generator))

    def __repr__(self) -> str:
        return f"DihedralSpec(q={self.q}, m={self.m}, p={format_polynomial(self.generator)!r})"


def make_spec(q: int, m: int, generator, basis: FoldingBasis | None = None) -> DihedralSpec:
    """Build a spec; ``generator`` is a Polynomial over F_{q^2} or its text form."""
    if m < 3:
        raise PreconditionError(f"m must be at least 3, got {m}")
    basis = basis or folding_basis(q)
    if isinstance(generator, str):
        generator = parse_polynomial(generator, basis.ext)
    elif not isinstance(generator, Polynomial):
        generator = Polynomial(basis.ext, generator)
    generator = quotient_reduce(generator, m)
    if math.gcd(m, q) == 1:
        m_prime = pow(m, -1, q) if q > 1 else 1
        r = (m_prime * m - 1) // q
    else:
        m_prime = r = None
    principal = math.gcd(m, basis.base.characteristic) == 1
    return DihedralSpec(q, m, basis, generator, r, m_prime, principal)


def _require_coprime(spec: DihedralSpec) -> None:
    if spec.r is None:
        raise NotCoprime(f"gcd(m={spec.m}, q={spec.q}) != 1")


def _ring_power(f: Polynomial, e: int, m: int) -> Polynomial:
    out = Polynomial(f.field, [1])
    for _ in range(e):
        out = mulmod(out, f, m)
    return out


def conjugate_generator(spec: DihedralSpec) -> Polynomial:
    """pbar(x^{m-1}) = c1 * p(x^r)^q + c2 * p(x^{m-1}) in F_{q^2}[x]/(x^m - 1)."""
    _require_coprime(spec)
    p, m = spec.generator, spec.m
    c_frob, c_lin = spec.basis._coefficients
    frob = _ring_power(substitute_power(p, spec.r, m), spec.q, m)
    return frob * c_frob + substitute_power(p, m - 1, m) * c_lin


def conjugate_generator_by_swap(spec: DihedralSpec) -> Polynomial:
    """Same polynomial as :func:`conjugate_generator`, via coefficient swap and x -> x^{m-1}."""
    pbar = spec.generator.map_coefficients(spec.basis.swap)
    return substitute_power(pbar, spec.m - 1, spec.m)


def _conjugate_any(spec: DihedralSpec) -> Polynomial:
    if spec.r is not None:
        return conjugate_generator(spec)
    return conjugate_generator_by_swap(spec)


def generator_rows(f: Polynomial, m: int, basis: FoldingBasis) -> np.ndarray:
    """unfold(x^i f) for i = 0..m-1, one row each."""
    c = np.zeros(m, dtype=np.int64)
    c[: len(f.coeffs)] = f.coeffs
    circ = np.stack([np.roll(c, i) for i in range(m)])
    return unfold(circ, basis)


# -- codes ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear code over ``base_field`` with a generator matrix in reduced row echelon form."""

    base_field: FiniteField
    length: int
    gen_matrix: np.ndarray = field(repr=False)

    @classmethod
    def from_rows(cls, F: FiniteField, rows, length: int | None = None) -> LinearCode:
        rows = np.asarray(rows, dtype=np.int64)
        if length is None:
            length = rows.shape[-1]
        rows = rows.reshape(-1, length)
        R = linalg.rref(F, rows)[0] if rows.size else np.zeros((0, length), dtype=np.int64)
        R.setflags(write=False)
        return cls(F, length, R)

    @property
    def k(self) -> int:
        return self.gen_matrix.shape[0]

    @property
    def n(self) -> int:
        return self.length

    @property
    def q(self) -> int:
        return self.base_field.order

    @cached_property
    def parity_check(self) -> np.ndarray:
        H = linalg.nullspace(self.base_field, self.gen_matrix, self.length)
        H.setflags(write=False)
        return H

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(-1, self.length)
        H = self.parity_check
        if H.shape[0] == 0:
            return True
        return not np.any(linalg.matmul(self.base_field, v, H.T))

    def encode(self, u) -> np.ndarray:
        return linalg.matmul(self.base_field, np.atleast_2d(u), self.gen_matrix)[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.base_field == other.base_field
            and self.length == other.length
            and np.array_equal(self.gen_matrix, other.gen_matrix)
        )

    def __hash__(self) -> int:
        return hash((self.length, self.gen_matrix.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.base_field})"


def principal_rows(spec: DihedralSpec) -> np.ndarray:
    pbar = _conjugate_any(spec)
    return np.vstack(
        [
            generator_rows(spec.generator, spec.m, spec.basis),
            generator_rows(pbar, spec.m, spec.basis),
        ]
    )


def code_from_generator(spec: DihedralSpec) -> LinearCode:
    """Expand <p(x)>_{F_q} + <pbar(x^{m-1})>_{F_q} to an explicit code of length 2m."""
    _require_coprime(spec)
    return LinearCode.from_rows(spec.basis.base, principal_rows(spec), spec.n)


def code_from_two_generators(spec1: DihedralSpec, spec2: DihedralSpec) -> LinearCode:
    """Sum of two principal codes; allowed for any m, including p | m."""
    if (spec1.q, spec1.m) != (spec2.q, spec2.m):
        raise PreconditionError("both generators must share q and m")
    rows = np.vstack([principal_rows(spec1), principal_rows(spec2)])
    return LinearCode.from_rows(spec1.basis.base, rows, spec1.n)


def dimension_lower_bound(spec: DihedralSpec) -> int:
    if spec.generator.is_zero():
        raise ZeroGenerator("the zero generator has no dimension bound")
    pbar = _conjugate_any(spec)
    return max(spec.m - spec.generator.degree, spec.m - pbar.degree)


def dual_code(C: LinearCode) -> LinearCode:
    H = C.parity_check
    return LinearCode(C.base_field, C.length, H)


def star_product(f: Polynomial, g: Polynomial, spec_or_basis, m: int | None = None) -> int:
    """<unfold(f), unfold(g)> over F_q, as a raw base-field value."""
    basis = spec_or_basis.basis if isinstance(spec_or_basis, DihedralSpec) else spec_or_basis
    if m is None:
        m = spec_or_basis.m
    v = generator_rows(f, m, basis)[0]
    w = generator_rows(g, m, basis)[0]
    return int(linalg.matmul(basis.base, v[None, :], w[:, None])[0, 0])


def _all_orthogonal(F: FiniteField, A: np.ndarray, B: np.ndarray) -> bool:
    return not np.any(linalg.matmul(F, A, B.T))


def verify_dual_relations(spec: DihedralSpec, qpoly) -> bool:
    """Check x^i p, x^i pbar(x^{m-1}) against x^j q, x^j qbar(x^{m-1}) under the * product."""
    if not isinstance(qpoly, Polynomial):
        qpoly = parse_polynomial(qpoly, spec.basis.ext) if isinstance(qpoly, str) else Polynomial(spec.basis.ext, qpoly)
    other = spec.with_generator(qpoly)
    return _all_orthogonal(spec.basis.base, principal_rows(spec), principal_rows(other))


def char2_containment(spec: DihedralSpec) -> bool:
    """<pbar(x^{m-1})>_{F_q} lies in the dual of <p(x)>_{F_q} (characteristic 2)."""
    if spec.basis.base.characteristic != 2:
        raise NotCharTwo(f"q = {spec.q} is not a power of 2")
    P = generator_rows(spec.generator, spec.m, spec.basis)
    Pbar = generator_rows(_conjugate_any(spec), spec.m, spec.basis)
    return _all_orthogonal(spec.basis.base, P, Pbar)


def find_dual_generator(spec: DihedralSpec, seed: int = 0, attempts: int = 200) -> DihedralSpec:
    """A generator q(x) of the dual code, found among random dual codewords."""
    C = code_from_generator(spec)
    D = dual_code(C)
    rng = np.random.default_rng(seed)
    F = spec.basis.base
    if D.k == 0:
        return spec.with_generator(Polynomial(spec.basis.ext, []))
    for _ in range(attempts):
        u = rng.integers(0, F.order, size=D.k)
        w = fold(D.encode(u), spec.basis)
        cand = spec.with_generator(Polynomial(spec.basis.ext, w.tolist()))
        if code_from_generator(cand) == D:
            return cand
    raise AssertionError("no generator of the dual found; increase attempts")


# -- dihedral action -----------------------------------------------------------


@dataclass(frozen=True)
class DihedralAction:
    """Permutations of the 2m coordinates induced by left multiplication by a and b.

    ``alpha_perm[i]`` / ``beta_perm[i]`` is the 0-based image of coordinate i.
    """

    m: int
    alpha_perm: tuple[int, ...]
    beta_perm: tuple[int, ...]

    def cycles(self, which: str = "alpha") -> list[tuple[int, ...]]:
        """Disjoint cycles in 1-based notation, fixed points omitted."""
        perm = self.alpha_perm if which == "alpha" else self.beta_perm
        seen, out = set(), []
        for start in range(len(perm)):
            if start in seen or perm[start] == start:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i + 1)
                i = perm[i]
            out.append(tuple(cyc))
        return out


def dihedral_action(m: int) -> DihedralAction:
    n = 2 * m
    alpha = tuple((i + 2) % n for i in range(n))
    beta = [0] * n
    for j in range(m):
        # a^j -> a^{-j} b and a^j b -> a^{-j}
        beta[2 * j] = 2 * ((-j) % m) + 1
        beta[2 * j + 1] = 2 * ((-j) % m)
    return DihedralAction(m, alpha, tuple(beta))


def apply_permutation(v, perm) -> np.ndarray:
    """v^sigma: the entry at position i moves to position sigma(i)."""
    v = np.asarray(v)
    out = np.empty_like(v)
    out[..., list(perm)] = v
    return out


def compose(s, t) -> tuple[int, ...]:
    """s o t (apply t first)."""
    return tuple(s[t[i]] for i in range(len(t)))


def is_dihedral_invariant(C: LinearCode) -> bool:
    if C.length % 2 or C.length < 6:
        raise LengthTooShort(f"length {C.length} must be even and at least 6")
    act = dihedral_action(C.length // 2)
    G = C.gen_matrix
    if G.shape[0] == 0:
        return True
    images = np.vstack([apply_permutation(G, act.alpha_perm), apply_permutation(G, act.beta_perm)])
    return C.contains(images)


# -- BCH-type generators -----------------------------------------------------------


def _lcm_of_minimal_polynomials(ctx, exponents) -> Polynomial:
    p = Polynomial(ctx.small_field, [1])
    seen = set()
    for e in exponents:
        rep = ctx.cosets.coset_of(e % ctx.m)[0]
        if rep in seen:
            continue
        seen.add(rep)
        p = poly_lcm(p, minimal_polynomial(ctx, rep))
    return p


def bch_exponent_families(q: int, m: int, b: int, delta: int) -> tuple[list[int], list[int], list[int]]:
    """Exponents {b+j}, {-(b+j)}, {(b+j) r} for j = 0..delta-2, reduced mod m."""
    m_prime = pow(m, -1, q) if q > 1 else 1
    r = (m_prime * m - 1) // q
    run = [(b + j) % m for j in range(delta - 1)]
    return run, [(-e) % m for e in run], [(e * r) % m for e in run]


def bch_dihedral_generator(q: int, m: int, b: int, delta: int, basis: FoldingBasis | None = None) -> DihedralSpec:
    """Generator = lcm of the minimal polynomials of omega^e over all three exponent families."""
    if math.gcd(m, q) != 1:
        raise NotCoprime(f"gcd(m={m}, q={q}) != 1")
    if not 2 <= delta <= m:
        raise DeltaOutOfRange(f"delta={delta} outside [2, {m}]")
    basis = basis or folding_basis(q)
    ctx = root_context(basis.ext, m)
    exps = [e for fam in bch_exponent_families(q, m, b, delta) for e in fam]
    if len(ctx.cosets.closure(exps)) == m:
        raise DegenerateGenerator(f"all roots of x^{m}-1 required (q={q}, b={b}, delta={delta})")
    return make_spec(q, m, _lcm_of_minimal_polynomials(ctx, exps), basis=basis)


@dataclass(frozen=True)
class ConditionReport:
    """Whether 2^(2s+1) = -1 mod m has a solution s, for odd m."""

    m: int
    holds: bool
    s: int | None
    s2: int
    is_prime: bool


def binary_condition(m: int) -> ConditionReport:
    if m % 2 == 0:
        raise EvenModulus(f"m = {m} is even")
    if m < 3:
        raise PreconditionError("m must be at least 3")
    s2 = order_mod(2, m)
    s = next((s for s in range(s2) if pow(2, 2 * s + 1, m) == m - 1), None)
    report = ConditionReport(m, s is not None, s, s2, is_prime(m))
    if report.is_prime and report.holds != (s2 % 4 == 2):
        raise AssertionError(f"condition mismatch for prime m = {m}")
    return report


def binary_bch_generator(m: int, b: int, delta: int) -> DihedralSpec:
    """Binary generator lcm{M_{omega^b}, ..., M_{omega^{b+delta-2}}} over F_4."""
    if not binary_condition(m).holds:
        raise ConditionFails(f"no s with 2^(2s+1) = -1 mod {m}; use bch_dihedral_generator")
    if not 2 <= delta <= m:
        raise DeltaOutOfRange(f"delta={delta} outside [2, {m}]")
    basis = binary_basis()
    ctx = root_context(basis.ext, m)
    run = [(b + j) % m for j in range(delta - 1)]
    if len(ctx.cosets.closure(run)) == m:
        raise DegenerateGenerator(f"all roots of x^{m}-1 required (b={b}, delta={delta})")
    return make_spec(2, m, _lcm_of_minimal_polynomials(ctx, run), basis=basis)


def coset_condition(m: int) -> bool:
    """((m-1)/2) C_i = C_i for every 4-cyclotomic coset C_i mod m."""
    e = (m - 1) // 2
    part = cyclotomic_cosets(m, 4)
    return all({(e * i) % m for i in c} == set(c) for c in part.cosets)


def root_power_condition(m: int) -> bool:
    """Z(M_{omega^i})^((m-1)/2) = Z(M_{omega^i}) for all i, checked on field elements.

    Works in an extension of F_2 containing the m-th roots of unity; the zero
    set of each minimal polynomial is generated by repeated Frobenius (x -> x^4)
    rather than by coset arithmetic.
    """
    from .finite_field import BinaryExtension

    t = order_mod(4, m)
    E = BinaryExtension.of_degree(2 * t)
    omega = E.element_of_order(m)
    e = (m - 1) // 2
    power = 1
    seen = set()
    for _ in range(m):
        if power not in seen:
            zeros, z = set(), power
            while z not in zeros:
                zeros.add(z)
                z = E.pow(z, 4)
            seen |= zeros
            if {E.pow(z, e) for z in zeros} != zeros:
                return False
        power = E.mul(power, omega)
    return True


# -- text forms ----------------------------------------------------------------


def format_spec(spec: DihedralSpec) -> str:
    out = f"q={spec.q} m={spec.m} p={format_polynomial(spec.generator)}"
    if spec.basis.ext != folding_basis(spec.q).ext:
        out += " alpha-modulus=" + ",".join(map(str, spec.basis.ext.modulus))
    return out


def parse_spec(text: str) -> DihedralSpec:
    fields: dict[str, tuple[str, int]] = {}
    pos = 0
    for token in text.split():
        start = text.index(token, pos)
        pos = start + len(token)
        key, eq, value = token.partition("=")
        if not eq or key not in ("q", "m", "p", "alpha-modulus"):
            raise ParseError(f"unexpected token {token!r}", start)
        fields[key] = (value, start + len(key) + 1)
    for key in ("q", "m", "p"):
        if key not in fields:
            raise ParseError(f"missing field {key!r}", len(text))
    try:
        q = int(fields["q"][0])
        m = int(fields["m"][0])
    except ValueError:
        raise ParseError("q and m must be integers", fields["q"][1]) from None
    modulus = None
    if "alpha-modulus" in fields:
        value, at = fields["alpha-modulus"]
        try:
            modulus = tuple(int(c) for c in value.split(","))
        except ValueError:
            raise ParseError("alpha-modulus must list integers", at) from None
    basis = folding_basis(q, modulus)
    value, at = fields["p"]
    try:
        p = parse_polynomial(value, basis.ext)
    except ParseError as exc:
        raise ParseError(f"bad generator: {exc}", at + (exc.position or 0)) from None
    return make_spec(q, m, p, basis=basis)


def export_generator_matrix(C: LinearCode) -> str:
    """One row per line, space-separated base-q digits."""
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in C.gen_matrix)


def import_generator_matrix(text: str, F: FiniteField) -> LinearCode:
    rows = [list(map(int, line.split())) for line in text.splitlines() if line.strip()]
    if not rows:
        raise ParseError("empty matrix", 0)
    return LinearCode.from_rows(F, rows)
