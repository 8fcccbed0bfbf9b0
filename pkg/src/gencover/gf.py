"""Finite-field arithmetic for F_p and F_{p^m} with integer-encoded elements.

An element of F_{p^m} is a single integer in [0, p^m): base-p digit i of the
encoding is the coefficient of x^i in the polynomial representation.  The
modulus chosen for each (p, m) is the lexicographically smallest monic
irreducible polynomial of degree m, comparing coefficient tuples from the
constant term upward, so every run and platform agrees on the encoding.

Also provides the digit-packing bijection between t x n matrices over a prime
field F_p and length-n vectors over F_{p^t} (basis 1, x, ..., x^{t-1}), which
turns the block metric into the plain Hamming metric over the large alphabet.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import (
    CharacteristicMismatch,
    DegreeOutOfRange,
    DimensionMismatch,
    FieldMismatch,
    NonPrimeBaseField,
    NonPrimeCharacteristic,
)

MAX_DEGREE = 16

# Full q x q multiplication tables are only built for fields this small.
_TABLE_LIMIT = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num modulo den over F_p; den need not be monic."""
    num = list(num)
    _poly_trim(num)
    dd = len(den) - 1
    lead_inv = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    while len(num) - 1 >= dd and num:
        shift = len(num) - 1 - dd
        factor = (num[-1] * lead_inv) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        _poly_trim(num)
    return num


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree at most deg/2."""
    m = len(coeffs) - 1
    if coeffs[0] == 0:
        return False  # divisible by x
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            den = list(low) + [1]
            if not _poly_rem(list(coeffs), den, p):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=m):
        cand = tuple(low) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {m} over F_{p}")


class FieldSpec:
    """The finite field F_{p^m}, acting on integer-encoded elements.

    Instances are created through :func:`field_create` and are immutable;
    all arithmetic methods are pure and take/return plain ints in [0, q).
    """

    __slots__ = ("p", "m", "q", "modulus", "_mul_table", "_inv_table")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        if self.q <= _TABLE_LIMIT and m > 1:
            mul = [0] * (self.q * self.q)
            for a in range(self.q):
                for b in range(a, self.q):
                    v = self._mul_poly(a, b)
                    mul[a * self.q + b] = v
                    mul[b * self.q + a] = v
            self._mul_table = mul
            inv = [0] * self.q
            for a in range(1, self.q):
                inv[a] = self._pow_raw(a, self.q - 2)
            self._inv_table = inv
        else:
            self._mul_table = None
            self._inv_table = None

    # -- integer arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        out, shift = 0, 1
        while a or b:
            out += ((a + b) % self.p) * shift
            a //= self.p
            b //= self.p
            shift *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        out, shift = 0, 1
        while a:
            out += ((self.p - a % self.p) % self.p) * shift
            a //= self.p
            shift *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._pow_raw(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        return self._pow_raw(a, e)

    def _pow_raw(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul(self.digits_of(a), self.digits_of(b), self.p)
        rem = _poly_rem(prod, list(self.modulus), self.p)
        out = 0
        for c in reversed(rem):
            out = out * self.p + c
        return out

    # -- helpers ------------------------------------------------------------

    def digits_of(self, a: int) -> list[int]:
        """Base-p digits of an encoding, constant term first, length m."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def element(self, value: int) -> "GFElement":
        if not 0 <= value < self.q:
            raise ValueError(f"encoding {value} outside [0, {self.q})")
        return GFElement(value, self)

    @property
    def zero(self) -> "GFElement":
        return GFElement(0, self)

    @property
    def one(self) -> "GFElement":
        return GFElement(1, self)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class GFElement:
    """A field element: integer encoding plus the field it lives in."""

    value: int
    field: FieldSpec

    def _check(self, other: "GFElement") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "GFElement") -> "GFElement":
        self._check(other)
        return GFElement(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other: "GFElement") -> "GFElement":
        self._check(other)
        return GFElement(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other: "GFElement") -> "GFElement":
        self._check(other)
        return GFElement(self.field.mul(self.value, other.value), self.field)

    def __truediv__(self, other: "GFElement") -> "GFElement":
        self._check(other)
        return GFElement(
            self.field.mul(self.value, self.field.inv(other.value)), self.field
        )

    def __neg__(self) -> "GFElement":
        return GFElement(self.field.neg(self.value), self.field)

    def inverse(self) -> "GFElement":
        return GFElement(self.field.inv(self.value), self.field)

    def __repr__(self) -> str:
        return f"{self.value}@{self.field}"


@functools.lru_cache(maxsize=None)
def field_create(p: int, m: int) -> FieldSpec:
    """Build F_{p^m} with the canonical (lexicographically smallest) modulus.

    Deterministic: equal (p, m) always yields the identical field object.
    For m = 1 the modulus is the polynomial x and arithmetic is plain mod p.
    """
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if not 1 <= m <= MAX_DEGREE:
        raise DegreeOutOfRange(f"degree {m} outside [1, {MAX_DEGREE}]")
    if p**m > 2**62:
        raise DegreeOutOfRange(f"{p}^{m} exceeds the machine-word range")
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    return FieldSpec(p, m, _smallest_irreducible(p, m))


def gf_add(a: GFElement, b: GFElement) -> GFElement:
    return a + b


def gf_mul(a: GFElement, b: GFElement) -> GFElement:
    return a * b


def gf_neg(a: GFElement) -> GFElement:
    return -a


def gf_inv(a: GFElement) -> GFElement:
    return a.inverse()


def embed_base(a: GFElement, target: FieldSpec) -> GFElement:
    """Embed an element of the prime field F_p into F_{p^m} (constant polynomial)."""
    if a.field.m != 1:
        raise NonPrimeBaseField("embedding is defined from prime fields only")
    if a.field.p != target.p:
        raise CharacteristicMismatch(f"{a.field} does not embed into {target}")
    return GFElement(a.value, target)


def xi_map(v):
    """Pack a t x n matrix over a prime field F_p into a vector over F_{p^t}.

    Column j becomes the field element whose base-p digit i is row i of
    column j, i.e. the combination sum_i x^(i-1) * row_i.  Returns a 1 x n
    matrix over field_create(p, t).  Bijective; xi_inv undoes it.
    """
    from .fqlinalg import GFMatrix

    if v.field.m != 1:
        raise FieldMismatch("xi_map expects a matrix over a prime field")
    t, n = v.rows, v.cols
    if t < 1:
        raise DimensionMismatch("need at least one row")
    ext = field_create(v.field.p, t)
    packed = []
    for j in range(n):
        val = 0
        for i in reversed(range(t)):
            val = val * v.field.p + v.at(i, j)
        packed.append(val)
    return GFMatrix(ext, 1, n, packed)


def xi_inv(w):
    """Unpack a 1 x n vector over F_{p^t} into the t x n matrix over F_p."""
    from .fqlinalg import GFMatrix

    if w.rows != 1:
        raise DimensionMismatch("xi_inv expects a single-row matrix")
    ext = w.field
    base = field_create(ext.p, 1)
    t, n = ext.m, w.cols
    entries = [0] * (t * n)
    for j in range(n):
        for i, digit in enumerate(ext.digits_of(w.at(0, j))):
            entries[i * n + j] = digit
    return GFMatrix(base, t, n, entries)
