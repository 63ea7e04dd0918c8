"""Polynomials over finite fields, the ring F[x]/(x^m - 1), cosets and roots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BaseNotCoprime,
    CoefficientNotInSubfield,
    DivisionByZero,
    FieldMismatch,
    NotCoprime,
    ParseError,
    PreconditionError,
)
from .finite_field import (
    FieldElement,
    FiniteField,
    embedding_table,
    make_field,
    primitive_root_of_unity,
)


def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    """Immutable polynomial; ``coeffs[i]`` is the raw field value of x^i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs=()):
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatch(f"coefficient from {c.field}, expected {field}")
                c = c.value
            c = int(c)
            if not 0 <= c < field.order:
                raise PreconditionError(f"{c} is not an element of {field}")
            vals.append(c)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _trim(vals))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, field: FiniteField, degree: int, coeff: int = 1) -> Polynomial:
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def x_power_minus_one(cls, field: FiniteField, m: int) -> Polynomial:
        return cls(field, [field.neg(1)] + [0] * (m - 1) + [1])

    @property
    def degree(self) -> float | int:
        """Degree, with -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def coefficient(self, i: int) -> FieldElement:
        return self.field(self.coeffs[i] if i < len(self.coeffs) else 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r} over {self.field})"

    def _check(self, other: Polynomial) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial(F, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        F = self.field
        if isinstance(other, FieldElement):
            other = other.value if other.field == F else None
            if other is None:
                raise FieldMismatch("scalar from a different field")
        if isinstance(other, int):
            return Polynomial(F, [F.mul(c, other) for c in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(F, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._check(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - db, 0)
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = rem[shift + db]
            if c == 0:
                continue
            c = F.mul(c, inv_lead)
            quot[shift] = c
            for i, bi in enumerate(other.coeffs):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bi))
        return Polynomial(F, quot), Polynomial(F, rem)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if not self.coeffs:
            return self
        return self * self.field.inv(self.coeffs[-1])

    def __call__(self, x: int) -> int:
        """Evaluate at a raw field value (Horner)."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def map_coefficients(self, fn) -> Polynomial:
        return Polynomial(self.field, [fn(c) for c in self.coeffs])


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    if not f or not g:
        return Polynomial(f.field, [])
    return ((f * g) // poly_gcd(f, g)).monic()


def poly_arith(op: str, f: Polynomial, g: Polynomial):
    """Dispatch ``op`` in {add, mul, divmod, gcd, lcm}."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "divmod":
        return divmod(f, g)
    if op == "gcd":
        return poly_gcd(f, g)
    if op == "lcm":
        return poly_lcm(f, g)
    raise PreconditionError(f"unknown polynomial operation {op!r}")


def quotient_reduce(f: Polynomial, m: int) -> Polynomial:
    """Canonical representative of f in F[x]/(x^m - 1)."""
    if m < 1:
        raise PreconditionError("m must be positive")
    F = f.field
    out = [0] * m
    for i, c in enumerate(f.coeffs):
        if c:
            out[i % m] = F.add(out[i % m], c)
    return Polynomial(F, out)


def substitute_power(f: Polynomial, e: int, m: int) -> Polynomial:
    """Image of f under x -> x^e in F[x]/(x^m - 1)."""
    if m < 1:
        raise PreconditionError("m must be positive")
    F = f.field
    out = [0] * m
    for i, c in enumerate(f.coeffs):
        if c:
            j = (i * e) % m
            out[j] = F.add(out[j], c)
    return Polynomial(F, out)


def mulmod(f: Polynomial, g: Polynomial, m: int) -> Polynomial:
    """Product in F[x]/(x^m - 1) without forming the full product."""
    f._check(g)
    F = f.field
    out = [0] * m
    for i, x in enumerate(f.coeffs):
        if x:
            for j, y in enumerate(g.coeffs):
                if y:
                    k = (i + j) % m
                    out[k] = F.add(out[k], F.mul(x, y))
    return Polynomial(F, out)


def shift(f: Polynomial, i: int, m: int) -> Polynomial:
    """x^i * f in F[x]/(x^m - 1): a cyclic rotation of the coefficients."""
    c = list(f.coeffs) + [0] * (m - len(f.coeffs))
    i %= m
    return Polynomial(f.field, c[m - i :] + c[: m - i])


def order_mod(a: int, m: int) -> int:
    """Least e >= 1 with a^e = 1 mod m."""
    if math.gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1")
    if m == 1:
        return 1
    e, v = 1, a % m
    while v != 1:
        v = v * a % m
        e += 1
    return e


@dataclass(frozen=True)
class CosetPartition:
    m: int
    base: int
    cosets: tuple[tuple[int, ...], ...]

    def coset_of(self, i: int) -> tuple[int, ...]:
        return self.cosets[self._index[i % self.m]]

    @property
    def _index(self) -> dict[int, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {j: n for n, c in enumerate(self.cosets) for j in c}
            object.__setattr__(self, "_idx", idx)
        return idx

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    def closure(self, exponents) -> frozenset[int]:
        """Smallest union of cosets containing every exponent (taken mod m)."""
        out: set[int] = set()
        for e in exponents:
            out.update(self.coset_of(e))
        return frozenset(out)


@lru_cache(maxsize=None)
def cyclotomic_cosets(m: int, base: int) -> CosetPartition:
    """Orbits of multiplication by ``base`` on Z/mZ, each sorted, ordered by minimum."""
    if m < 1:
        raise PreconditionError("m must be positive")
    if math.gcd(base, m) != 1:
        raise BaseNotCoprime(f"gcd({base}, {m}) != 1")
    b = base % m
    seen = [False] * m
    cosets = []
    for i in range(m):
        if seen[i]:
            continue
        orbit, j = [], i
        while not seen[j]:
            seen[j] = True
            orbit.append(j)
            j = j * b % m
        cosets.append(tuple(sorted(orbit)))
    return CosetPartition(m, b, tuple(cosets))


@dataclass(frozen=True)
class RootContext:
    """Where the m-th roots of unity live for polynomials over ``small_field``.

    ``small_field`` is F_{q^2}; ``big_field`` is F_{q^{2t}} with t the order of
    q^2 mod m, and ``omega`` has multiplicative order exactly m.
    """

    m: int
    t: int
    small_field: FiniteField
    big_field: FiniteField
    omega: FieldElement
    embed: tuple[int, ...]

    @property
    def cosets(self) -> CosetPartition:
        return cyclotomic_cosets(self.m, self.small_field.order)

    def power(self, i: int) -> int:
        """omega**i as a raw value in big_field."""
        return self.big_field.pow(self.omega.value, i % self.m)

    def pull_back(self, v: int) -> int:
        try:
            return self._inverse_embed[v]
        except KeyError:
            raise CoefficientNotInSubfield(
                f"{self.big_field.format(v)} is not in the image of {self.small_field}"
            ) from None

    @property
    def _inverse_embed(self) -> dict[int, int]:
        inv = self.__dict__.get("_inv")
        if inv is None:
            inv = {e: s for s, e in enumerate(self.embed)}
            object.__setattr__(self, "_inv", inv)
        return inv


@lru_cache(maxsize=None)
def root_context(small_field: FiniteField, m: int) -> RootContext:
    Q = small_field.order
    t = order_mod(Q, m)
    E = make_field(small_field.characteristic, small_field.degree * t)
    omega = primitive_root_of_unity(E, m)
    return RootContext(m, t, small_field, E, omega, embedding_table(small_field, E))


def evaluate(f: Polynomial, ctx: RootContext, i: int) -> FieldElement:
    """f(omega^i), computed in the big field."""
    E = ctx.big_field
    x = ctx.power(i)
    acc = 0
    for c in reversed(f.coeffs):
        acc = E.add(E.mul(acc, x), ctx.embed[c])
    return E(acc)


def roots_among_powers(f: Polynomial, ctx: RootContext) -> frozenset[int]:
    return frozenset(i for i in range(ctx.m) if evaluate(f, ctx, i).value == 0)


@lru_cache(maxsize=None)
def _minimal_polynomial(ctx: RootContext, rep: int) -> Polynomial:
    E = ctx.big_field
    prod = [1]
    for j in ctx.cosets.coset_of(rep):
        root = E.neg(ctx.power(j))
        nxt = [0] * (len(prod) + 1)
        for d, c in enumerate(prod):
            nxt[d + 1] = E.add(nxt[d + 1], c)
            nxt[d] = E.add(nxt[d], E.mul(c, root))
        prod = nxt
    return Polynomial(ctx.small_field, [ctx.pull_back(c) for c in prod])


def minimal_polynomial(ctx: RootContext, i: int, target: FiniteField | None = None) -> Polynomial:
    """Minimal polynomial of omega^i over F_{q^2}: the product of (x - omega^j), j in C_i."""
    if target is not None and target != ctx.small_field:
        raise FieldMismatch(f"root context is over {ctx.small_field}, not {target}")
    if not 0 <= i < ctx.m:
        raise PreconditionError(f"exponent {i} outside [0, {ctx.m})")
    return _minimal_polynomial(ctx, ctx.cosets.coset_of(i)[0])


def polynomial_from_roots(ctx: RootContext, exponents) -> Polynomial:
    """Product of the minimal polynomials of the cosets covering ``exponents``."""
    cos = ctx.cosets
    reps = sorted({cos.coset_of(e)[0] for e in exponents})
    p = Polynomial(ctx.small_field, [1])
    for r in reps:
        p = p * _minimal_polynomial(ctx, r)
    return p


# -- text form ---------------------------------------------------------------


def format_polynomial(f: Polynomial) -> str:
    if not f.coeffs:
        return "0"
    return ",".join(f.field.format(c) for c in f.coeffs)


def parse_polynomial(text: str, field: FiniteField) -> Polynomial:
    """Parse comma-separated ascending coefficients, e.g. ``"1,a^2,1,1,a,1"``."""
    coeffs = []
    pos = 0
    for token in text.split(","):
        stripped = token.strip()
        offset = pos + (len(token) - len(token.lstrip()))
        if not stripped:
            raise ParseError("empty coefficient", offset)
        try:
            coeffs.append(field.parse(stripped))
        except ParseError:
            raise ParseError(f"invalid coefficient {stripped!r}", offset) from None
        pos += len(token) + 1
    return Polynomial(field, coeffs)
