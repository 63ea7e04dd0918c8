"""Finite fields F_{p^k} with deterministic, table-driven arithmetic.

Elements are plain integers: the polynomial ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}``
(reduced modulo the field's defining polynomial) is stored as
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.  ``FieldElement`` wraps such an integer
together with its field for the public API; hot loops work on raw integers.

Fields with at most ``TABLE_LIMIT`` elements get exp/log tables.  Larger fields
(needed for roots of unity of awkward orders, e.g. m = 23 over F_4) fall back to
polynomial-basis arithmetic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from .errors import (
    CharacteristicMismatch,
    DivisionByZero,
    FieldMismatch,
    NonPrimeCharacteristic,
    OrderNotDivisible,
    ParseError,
    PreconditionError,
    ReducibleModulus,
    ZeroElement,
)

TABLE_LIMIT = 1 << 20
_ADD_TABLE_LIMIT = 256
_TRIAL_DIVISION_LIMIT = 1 << 12


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of ``n`` in increasing order."""
    if n < 2:
        return ()
    if n < 1 << 40:
        out = []
        f = 2
        while f * f <= n:
            if n % f == 0:
                out.append(f)
                while n % f == 0:
                    n //= f
            f += 1 if f == 2 else 2
        if n > 1:
            out.append(n)
        return tuple(out)
    from sympy import factorint

    return tuple(sorted(factorint(n)))


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# Polynomials over the prime field F_p, as ascending coefficient lists.
# Only used to build and validate field moduli.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, f, p)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _pmulmod(base, base, f, p)
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _monic_polys(p: int, d: int):
    for tail in product(range(p), repeat=d):
        yield list(tail[::-1]) + [1]


def _irreducible_trial(f: list[int], p: int) -> bool:
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(p, d):
            if not _pmod(f, g, p):
                return False
    return True


def _irreducible_rabin(f: list[int], p: int) -> bool:
    k = len(f) - 1
    x = [0, 1]
    for r in prime_factors(k):
        h = _psub(_ppowmod(x, p ** (k // r), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return not _psub(_ppowmod(x, p**k, f, p), x, p)


def is_irreducible(f: list[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Trial division against every monic polynomial of degree <= k/2 when that is
    cheap; Rabin's test otherwise.
    """
    k = len(f) - 1
    if k < 1 or f[-1] % p != 1:
        return False
    if k == 1:
        return True
    if f[0] % p == 0:
        return False
    if p ** (k // 2) <= _TRIAL_DIVISION_LIMIT:
        return _irreducible_trial(f, p)
    return _irreducible_rabin(f, p)


def _root_is_primitive(f: list[int], p: int) -> bool:
    k = len(f) - 1
    n = p**k - 1
    if k == 1:
        g = (-f[0]) % p
        return g != 0 and all(pow(g, n // r, p) != 1 for r in prime_factors(n))
    x = [0, 1]
    return all(_ppowmod(x, n // r, f, p) != [1] for r in prime_factors(n))


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest primitive monic polynomial of degree k over F_p.

    "Smallest" compares the integer encoding sum(c_i p^i), i.e. coefficient
    lists are compared from the leading term down.  F_4 is pinned to x^2+x+1
    (the only candidate anyway).
    """
    for v in range(p**k):
        f = [(v // p**i) % p for i in range(k)] + [1]
        if f[0] == 0 and k > 1:
            continue
        if is_irreducible(f, p) and _root_is_primitive(f, p):
            return tuple(f)
    raise AssertionError(f"no primitive polynomial of degree {k} over F_{p}")


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        b = self._coerce(other)
        return self.field(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return self.field(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return self.field(self.field.sub(b, self.value))

    def __neg__(self):
        return self.field(self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return self.field(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return self.field(self.field.div(self.value, b))

    def __pow__(self, e: int):
        return self.field(self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return self.field(self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.field.format(self.value)!r} in {self.field})"

    def __str__(self) -> str:
        return self.field.format(self.value)


class FiniteField:
    """The field F_{p^k} = F_p[x]/(modulus).

    Use :func:`make_field` rather than the constructor; it validates the modulus
    and caches instances so that equal fields are the same object.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.characteristic = p
        self.degree = k
        self.modulus = tuple(modulus)
        self.order = p**k
        self._pow_p = [p**i for i in range(k + 1)]
        # x^k expressed in lower terms: x^k = -sum(modulus[i] x^i)
        self._reduce_digits = [(-c) % p for c in self.modulus[:k]]
        self._reduce_int = self._digits_to_int(self._reduce_digits)
        self.exp_table: np.ndarray | None = None
        self.log_table: np.ndarray | None = None
        self._add_table: np.ndarray | None = None
        self.generator = self._find_generator()
        if self.order <= TABLE_LIMIT:
            self._build_tables()

    # -- representation helpers -------------------------------------------

    def _digits(self, v: int) -> list[int]:
        p = self.characteristic
        out = []
        for _ in range(self.degree):
            out.append(v % p)
            v //= p
        return out

    def _digits_to_int(self, digits) -> int:
        v = 0
        for d in reversed(list(digits)):
            v = v * self.characteristic + d
        return v

    def __call__(self, value: int) -> FieldElement:
        if not 0 <= value < self.order:
            raise PreconditionError(f"{value} is not an element index of {self}")
        return FieldElement(self, int(value))

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> F_p -> this field."""
        return n % self.characteristic

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        return FieldElement(self, self.generator)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.order))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.characteristic == other.characteristic
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.characteristic, self.modulus))

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"GF({self.order})"
        return f"GF({self.characteristic}^{self.degree})"

    # -- polynomial-basis arithmetic (no tables) ---------------------------

    def _add_slow(self, a: int, b: int) -> int:
        p = self.characteristic
        if p == 2:
            return a ^ b
        v, place = 0, 1
        while a or b:
            v += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return v

    def _neg_slow(self, a: int) -> int:
        p = self.characteristic
        if p == 2:
            return a
        return self._digits_to_int((-d) % p for d in self._digits(a))

    def _mul_slow(self, a: int, b: int) -> int:
        p, k = self.characteristic, self.degree
        if p == 2:
            top = 1 << k
            red = self._reduce_int
            acc = 0
            while b:
                if b & 1:
                    acc ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= top | red
            return acc
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        red = self._reduce_digits
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, r in enumerate(red):
                    prod[deg - k + i] = (prod[deg - k + i] + c * r) % p
        return self._digits_to_int(prod[:k])

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            e >>= 1
            if e:
                a = self._mul_slow(a, a)
        return result

    def _order_slow(self, a: int) -> int:
        n = self.order - 1
        e = n
        for r in prime_factors(n):
            while e % r == 0 and self._pow_slow(a, e // r) == 1:
                e //= r
        return e

    def _find_generator(self) -> int:
        n = self.order - 1
        # the class of x itself, which generates whenever the modulus is primitive
        if self.degree == 1:
            x = (-self.modulus[0]) % self.characteristic
        else:
            x = self.characteristic
        if x != 0 and self._order_slow(x) == n:
            return x
        for v in range(1, self.order):
            if self._order_slow(v) == n:
                return v
        raise AssertionError("multiplicative group has no generator")

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = np.zeros(2 * n + 1, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        g = self.generator
        v = 1
        if self.characteristic == 2 and g == 2:
            top, red = 1 << self.degree, self._reduce_int | (1 << self.degree)
            for i in range(n):
                exp[i] = v
                log[v] = i
                v <<= 1
                if v & top:
                    v ^= red
        else:
            for i in range(n):
                exp[i] = v
                log[v] = i
                v = self._mul_slow(v, g)
        exp[n : 2 * n] = exp[:n]
        exp[2 * n] = exp[0]
        self.exp_table = exp
        self.log_table = log
        self._exp = exp.tolist()
        self._log = log.tolist()
        if self.characteristic != 2 and self.order <= _ADD_TABLE_LIMIT:
            table = np.empty((self.order, self.order), dtype=np.int64)
            for a in range(self.order):
                for b in range(self.order):
                    table[a, b] = self._add_slow(a, b)
            self._add_table = table
            self._add_list = table.tolist()

    # -- public arithmetic on raw integer values --------------------------

    def add(self, a: int, b: int) -> int:
        if self.characteristic == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_list[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.characteristic == 2:
            return a
        if self._add_table is not None:
            return self._neg_list[a]
        return self._neg_slow(a)

    @cached_property
    def _neg_list(self) -> list[int]:
        return [self._neg_slow(a) for a in range(self.order)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.exp_table is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.exp_table is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._pow_slow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero(f"zero to a negative power in {self}")
            return 1 if e == 0 else 0
        n = self.order - 1
        if self.exp_table is not None:
            return self._exp[(self._log[a] * e) % n]
        return self._pow_slow(a, e % n)

    def log(self, a: int) -> int:
        """Discrete logarithm to the stored generator."""
        if a == 0:
            raise ZeroElement("log of zero")
        if self.log_table is not None:
            return self._log[a]
        return self._bsgs(a)

    def _bsgs(self, a: int) -> int:
        n = self.order - 1
        step = math.isqrt(n) + 1
        baby = {}
        v = 1
        for j in range(step):
            baby.setdefault(v, j)
            v = self._mul_slow(v, self.generator)
        giant = self._pow_slow(self.inv(self.generator), step)
        v = a
        for i in range(step + 1):
            if v in baby:
                return (i * step + baby[v]) % n
            v = self._mul_slow(v, giant)
        raise AssertionError("discrete log failed")

    def exp(self, e: int) -> int:
        """generator**e as a raw value."""
        return self.pow(self.generator, e)

    def order_of(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("the zero element has no multiplicative order")
        n = self.order - 1
        if self.log_table is not None:
            return n // math.gcd(n, self._log[a])
        return self._order_slow(a)

    def in_prime_subfield(self, a: int) -> bool:
        return a < self.characteristic

    # -- text form ---------------------------------------------------------

    def format(self, a: int) -> str:
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        if self.degree == 1:
            return str(a)
        e = self.log(a)
        return "a" if e == 1 else f"a^{e}"

    def parse(self, text: str) -> int:
        s = text.strip()
        m = re.fullmatch(r"a(?:\^(-?\d+))?", s)
        if m:
            return self.exp(int(m.group(1)) if m.group(1) else 1)
        if re.fullmatch(r"-?\d+", s):
            return int(s) % self.characteristic
        raise ParseError(f"invalid field element {text!r}", 0)


@lru_cache(maxsize=None)
def _make_field_cached(p: int, k: int, modulus: tuple[int, ...]) -> FiniteField:
    return FiniteField(p, k, modulus)


def make_field(p: int, k: int = 1, modulus=None) -> FiniteField:
    """Return F_{p^k}.

    Without ``modulus`` the smallest primitive polynomial of degree ``k`` is used
    (see :func:`default_modulus`), so identical arguments always give identical
    element encodings.
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if k < 1:
        raise PreconditionError(f"degree must be positive, got {k}")
    if modulus is None:
        modulus = default_modulus(p, k)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != k + 1 or modulus[-1] != 1:
        raise PreconditionError(f"modulus must be monic of degree {k}: {modulus}")
    if not is_irreducible(list(modulus), p):
        raise ReducibleModulus(f"{modulus} is reducible over F_{p}")
    return _make_field_cached(p, k, modulus)


def field_of_order(q: int, modulus=None) -> FiniteField:
    for p in prime_factors(q)[:1]:
        k = round(math.log(q, p))
        if p**k == q:
            return make_field(p, k, modulus)
    raise NonPrimeCharacteristic(f"{q} is not a prime power")


def field_arith(op: str, a: FieldElement, b) -> FieldElement:
    """Dispatch ``op`` in {add, mul, inv, pow} on field elements."""
    if op == "pow":
        return a ** int(b)
    if op == "inv":
        return a.inverse()
    if not isinstance(b, FieldElement):
        raise FieldMismatch(f"{op} needs two field elements")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise PreconditionError(f"unknown field operation {op!r}")


def multiplicative_order(a: FieldElement) -> int:
    return a.field.order_of(a.value)


def primitive_root_of_unity(E: FiniteField, m: int) -> FieldElement:
    """generator**((|E|-1)/m), an element of order exactly m."""
    n = E.order - 1
    if m < 1 or n % m:
        raise OrderNotDivisible(f"{m} does not divide {n}")
    return E(E.exp(n // m))


@lru_cache(maxsize=None)
def embedding_table(F: FiniteField, E: FiniteField) -> tuple[int, ...]:
    """Values in E of every element of F under a fixed field embedding.

    The root of F's modulus is sent to the first power h^j (j = 1, 2, ...) of
    h = g_E^((|E|-1)/(|F|-1)) that is a root of that modulus.  When F's modulus
    is primitive and j = 1 works this is the map g_F -> h; in general the
    search is required for the map to be additive.
    """
    if F.characteristic != E.characteristic:
        raise CharacteristicMismatch(f"{F} and {E} have different characteristic")
    if E.degree % F.degree:
        raise PreconditionError(f"{F} is not a subfield of {E}")
    n_e, n_f = E.order - 1, F.order - 1
    h = E.exp(n_e // n_f)

    def evaluate(coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = E.add(E.mul(acc, x), c)
        return acc

    cand = h
    for _ in range(n_f):
        if evaluate(F.modulus, cand) == 0:
            rho = cand
            break
        cand = E.mul(cand, h)
    else:
        raise AssertionError("no root of the subfield modulus found")
    return tuple(evaluate(F._digits(v), rho) for v in range(F.order))


def subfield_embed(a: FieldElement, E: FiniteField) -> FieldElement:
    return E(embedding_table(a.field, E)[a.value])


# ---------------------------------------------------------------------------
# GF(2^k) on bare integers, for checks that need a splitting field of x^m - 1
# far beyond table size.  Any irreducible modulus will do here, so no
# factorisation of 2^k - 1 is needed.


def _gf2_mulmod(a: int, b: int, f: int, k: int) -> int:
    acc = 0
    top = 1 << k
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= f
    return acc


def _gf2_mod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    while a.bit_length() - 1 >= df:
        a ^= f << (a.bit_length() - 1 - df)
    return a


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _gf2_irreducible(f: int) -> bool:
    k = f.bit_length() - 1
    if k < 1:
        return False

    def x_pow_2_pow(i: int) -> int:
        v = 2
        for _ in range(i):
            v = _gf2_mulmod(v, v, f, k)
        return v

    for r in prime_factors(k):
        if _gf2_gcd(f, x_pow_2_pow(k // r) ^ 2) != 1:
            return False
    return x_pow_2_pow(k) == _gf2_mod(2, f)


class BinaryExtension:
    """GF(2^k) = F_2[x]/(f) with f the smallest irreducible of degree k."""

    def __init__(self, k: int, modulus: int):
        self.degree = k
        self.modulus = modulus
        self.order = 1 << k

    @classmethod
    @lru_cache(maxsize=None)
    def of_degree(cls, k: int) -> BinaryExtension:
        for f in range((1 << k) + 1, 1 << (k + 1), 2):
            if _gf2_irreducible(f):
                return cls(k, f)
        raise AssertionError(f"no irreducible polynomial of degree {k}")

    def mul(self, a: int, b: int) -> int:
        return _gf2_mulmod(a, b, self.modulus, self.degree)

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def element_of_order(self, m: int) -> int:
        n = self.order - 1
        if n % m:
            raise OrderNotDivisible(f"{m} does not divide {n}")
        for beta in range(2, self.order):
            w = self.pow(beta, n // m)
            if all(self.pow(w, m // r) != 1 for r in prime_factors(m)):
                return w
        if m == 1:
            return 1
        raise AssertionError(f"no element of order {m}")
