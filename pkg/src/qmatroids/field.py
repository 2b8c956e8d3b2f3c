"""Finite fields F_p and F_{p^e}.

Elements are plain integers.  The element c_0 + c_1 x + ... + c_{e-1} x^{e-1}
(polynomial basis, reduced modulo a monic irreducible polynomial) is stored as
``sum(c_i * p**i)``, so comparing the integers gives the element ordering used
throughout the package: base-p digits, low-degree coefficient least
significant.  :class:`FieldElement` wraps an integer for interactive use; the
hot loops work on the integers directly through a :class:`FieldSpec`.
"""

from __future__ import annotations

import functools
import itertools
import math

import numpy as np

from .errors import FieldDivisionByZero, InvalidCharacteristic, QMatroidError

__all__ = [
    "FieldSpec",
    "FieldElement",
    "field_make",
    "gf",
    "primitive_element",
    "is_prime",
    "prime_power",
]

# add tables above this size are not materialized (odd characteristic only)
_ADD_TABLE_LIMIT = 1024


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, or raise if q is not a prime power."""
    if q >= 2:
        for p in _prime_factors(q)[:1]:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r == 1:
                return p, e
    raise InvalidCharacteristic(f"{q} is not a prime power")


# -- polynomials over F_p as coefficient lists, low degree first ------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of a modulo monic b over F_p."""
    a = _trim(list(a))
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _monic_polys(p, degree):
    """All monic polynomials of the given degree, in numeric order."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(reversed(low)) + [1]


def _numeric_monic_polys(p, degree):
    # numeric order of sum(c_i p**i): the highest free coefficient varies slowest
    for value in range(p**degree):
        digits = [(value // p**i) % p for i in range(degree)]
        yield digits + [1]


def _is_irreducible(f, p):
    e = len(f) - 1
    for d in range(1, e // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(f, g, p):
                return False
    return True


@functools.lru_cache(maxsize=None)
def _smallest_irreducible(p, e):
    for f in _numeric_monic_polys(p, e):
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The field F_{p^e} with a fixed modulus.

    ``modulus`` lists the coefficients of the defining polynomial low degree
    first (leading 1 included); it is empty for a prime field.
    """

    def __init__(self, p: int, e: int, modulus=()):
        if not is_prime(p):
            raise InvalidCharacteristic(f"characteristic {p} is not prime")
        if e < 1:
            raise QMatroidError("degree must be >= 1")
        modulus = tuple(modulus)
        if e == 1:
            modulus = ()
        elif len(modulus) != e + 1 or modulus[-1] != 1 or not _is_irreducible(list(modulus), p):
            raise QMatroidError(f"modulus {modulus} is not monic irreducible of degree {e}")
        self.p = p
        self.e = e
        self.modulus = modulus
        self.order = p**e
        self.zero = 0
        self.one = 1
        self._build()

    # -- construction ------------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p**i) % p for i in range(self.e))

    def from_digits(self, digits) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(digits))

    def _polymul(self, a, b):
        p = self.p
        if self.e == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, self.modulus, p)
        return self.from_digits(rem)

    def _is_primitive(self, a):
        n = self.order - 1
        for r in _prime_factors(n):
            if self._polypow(a, n // r) == 1:
                return False
        return True

    def _polypow(self, a, k):
        result, base = 1, a
        while k:
            if k & 1:
                result = self._polymul(result, base)
            base = self._polymul(base, base)
            k >>= 1
        return result

    def _build(self):
        n = self.order - 1
        if self.order == 2:
            gen = 1
        else:
            gen = next(a for a in range(2, self.order) if self._is_primitive(a))
        self.generator = gen
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = exp[i + n] = x
            log[x] = i
            x = self._polymul(x, gen)
        self._exp = exp
        self._log = log
        p = self.p
        if p == 2:
            self._neg = list(range(self.order))
        else:
            self._neg = [self.from_digits((-c) % p for c in self.digits(a)) for a in range(self.order)]
        self._add_table = None
        if p != 2 and self.e > 1 and self.order <= _ADD_TABLE_LIMIT:
            self._add_table = [
                [self._digit_add(a, b) for b in range(self.order)] for a in range(self.order)
            ]

    def _digit_add(self, a, b):
        p = self.p
        return self.from_digits((x + y) % p for x, y in zip(self.digits(a), self.digits(b)))

    # -- arithmetic on integer codes ------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZero("inverse of zero")
        n = self.order - 1
        return self._exp[(n - self._log[a]) % n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            if k < 0:
                raise FieldDivisionByZero("negative power of zero")
            return 0
        n = self.order - 1
        return self._exp[(self._log[a] * k) % n]

    def frobenius(self, a: int, q: int | None = None) -> int:
        """a -> a**q for a subfield order q (default p)."""
        q = self.p if q is None else q
        sp, se = prime_power(q)
        if sp != self.p or self.e % se:
            raise QMatroidError(f"F_{q} is not a subfield of F_{self.order}")
        return self.pow(a, q)

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZero("log of zero")
        return self._log[a]

    def exp(self, i: int) -> int:
        """generator**i."""
        return self._exp[i % (self.order - 1)]

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZero("zero has no multiplicative order")
        n = self.order - 1
        return n // math.gcd(n, self._log[a])

    def elements(self) -> range:
        return range(self.order)

    # -- tables for vectorized kernels --------------------------------------

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        q = self.order
        t = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            for b in range(1, q):
                t[a, b] = self._exp[self._log[a] + self._log[b]]
        return t

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        q = self.order
        idx = np.arange(q)
        if self.p == 2:
            return idx[:, None] ^ idx[None, :]
        if self.e == 1:
            return (idx[:, None] + idx[None, :]) % q
        return np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return np.array(self._neg, dtype=np.int64)

    @functools.cached_property
    def power_coordinates(self) -> list[tuple[int, ...]]:
        """Coordinates of every element in the basis 1, g, ..., g^(e-1).

        ``g`` is the deterministic primitive element.  Indexed by element.
        """
        basis = [self.exp(i) for i in range(self.e)]
        coords: list = [None] * self.order
        for c in itertools.product(range(self.p), repeat=self.e):
            x = 0
            for ci, b in zip(c, basis):
                x = self.add(x, self.mul(ci, b))
            coords[x] = c
        if any(c is None for c in coords):  # pragma: no cover
            raise AssertionError("power basis is not a basis")
        return coords

    # -- misc ---------------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            value = value.value
        if isinstance(value, str):
            return FieldElement(self, self.parse(value))
        return FieldElement(self, int(value) % self.order if self.e == 1 else int(value))

    def format(self, a: int) -> str:
        """Base-p digit string, low degree first ("."-separated when p > 10)."""
        sep = "" if self.p <= 10 else "."
        return sep.join(str(c) for c in self.digits(a))

    def parse(self, s: str) -> int:
        parts = list(s) if self.p <= 10 else s.split(".")
        if len(parts) != self.e or any(not ch.isdigit() or int(ch) >= self.p for ch in parts):
            raise QMatroidError(f"{s!r} is not an element of F_{self.order}")
        return self.from_digits(int(ch) for ch in parts)

    def descriptor(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def field_make(p: int, e: int = 1) -> FieldSpec:
    """Deterministic F_{p^e}.

    The modulus is the monic irreducible polynomial of degree e whose
    coefficient vector is numerically smallest (low degree least significant).
    """
    if not is_prime(p):
        raise InvalidCharacteristic(f"characteristic {p} is not prime")
    if e < 1:
        raise QMatroidError("degree must be >= 1")
    modulus = _smallest_irreducible(p, e) if e > 1 else ()
    return FieldSpec(p, e, modulus)


def gf(q: int) -> FieldSpec:
    """The deterministic field with q elements."""
    p, e = prime_power(q)
    return field_make(p, e)


def primitive_element(f: FieldSpec) -> "FieldElement":
    """Smallest element of multiplicative order p^e - 1."""
    return FieldElement(f, f.generator)


@functools.total_ordering
class FieldElement:
    """An element of a :class:`FieldSpec`, with operator support."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        if not 0 <= value < field.order:
            raise QMatroidError(f"{value} is not an element code of F_{field.order}")
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise QMatroidError("elements of different fields")
            return other.value
        if isinstance(other, int):
            if other % self.field.p != other and self.field.e > 1:
                raise QMatroidError("integer constants must lie in the prime field")
            return other % self.field.p
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.field, v)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __pow__(self, k: int):
        return self._wrap(self.field.pow(self.value, k))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def frobenius(self, q: int | None = None) -> "FieldElement":
        return self._wrap(self.field.frobenius(self.value, q))

    def order(self) -> int:
        return self.field.multiplicative_order(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.field.format(self.value)} in F_{self.field.order})"
