"""Prime fields F_p and extension fields F_{p^m}.

Elements are immutable value objects: a residue in [0, p) for prime
fields, a coefficient vector over F_p (lowest degree first) for
extensions.  All arithmetic is exact; p and intermediate products use
Python integers, so nothing overflows regardless of p.  The fast
fixed-width path for big censuses lives in :mod:`covertwist.kernels`
and only ever sees p < 2**31.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    CapExceeded,
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
)

DEFAULT_CARDINALITY_CAP = 2**31

# Witness set making Miller-Rabin deterministic for n < 3.317e24
# (Sorenson & Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_VALID_BELOW = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin on the fixed witness set."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    if n >= _MR_VALID_BELOW:
        raise DegreeOutOfRange(f"{n} exceeds the deterministic witness range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# Dense F_p[x] helpers on plain int tuples (lowest degree first).  Kept
# local so field construction does not depend on covertwist.polyfactor.

def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _vec_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _vec_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)

def _vec_divmod(a, b, p):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], -1, p)
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] * inv_lead % p
        if coef:
            q[i] = coef
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - coef * bj) % p
    return _trim(q), _trim(a)


def _vec_invmod(a, mod, p):
    """Inverse of a modulo mod in F_p[x], by extended Euclid."""
    if not a:
        raise DivisionByZero("inverse of zero")
    r0, r1 = mod, a
    s0, s1 = (), (1,)
    while r1:
        q, r = _vec_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _vec_add(s0, _vec_mul(tuple(-c % p for c in q), s1, p), p)
    # r0 is the gcd, a nonzero constant since mod is irreducible
    c_inv = pow(r0[0], -1, p)
    return _trim([c * c_inv % p for c in s0])


@dataclass(frozen=True)
class Field:
    """F_{p^m}; ``modulus`` is the defining polynomial for m > 1."""

    p: int
    m: int
    modulus: Optional[tuple[int, ...]]  # monic, length m + 1, None iff m == 1

    @property
    def q(self) -> int:
        return self.p**self.m

    def element(self, value: Union[int, Sequence[int], "FieldElem"]) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if self.m == 1:
            if not isinstance(value, int):
                raise FieldMismatch("prime-field elements are integers")
            return FieldElem(self, value % self.p)
        if isinstance(value, int):
            vec = (value % self.p,)
        else:
            vec = tuple(int(v) % self.p for v in value)
            if len(vec) > self.m:
                raise DegreeOutOfRange("coefficient vector longer than m")
        vec = vec + (0,) * (self.m - len(vec))
        return FieldElem(self, vec)

    @property
    def zero(self) -> "FieldElem":
        return self.element(0)

    @property
    def one(self) -> "FieldElem":
        return self.element(1)

    def elements(self) -> Iterator["FieldElem"]:
        """All field elements in canonical (lexicographic) order."""
        if self.m == 1:
            for v in range(self.p):
                yield FieldElem(self, v)
        else:
            for vec in itertools.product(range(self.p), repeat=self.m):
                yield FieldElem(self, vec)

    def __repr__(self):
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}"


@dataclass(frozen=True)
class FieldElem:
    field: Field
    value: Union[int, tuple[int, ...]]

    def _check(self, other: "FieldElem"):
        if not isinstance(other, FieldElem) or other.field != self.field:
            raise FieldMismatch("operands belong to different fields")

    @property
    def is_zero(self) -> bool:
        if self.field.m == 1:
            return self.value == 0
        return all(c == 0 for c in self.value)

    def __add__(self, other):
        self._check(other)
        f = self.field
        if f.m == 1:
            return FieldElem(f, (self.value + other.value) % f.p)
        return f.element(_vec_add(self.value, other.value, f.p))

    def __sub__(self, other):
        self._check(other)
        f = self.field
        if f.m == 1:
            return FieldElem(f, (self.value - other.value) % f.p)
        return f.element(_vec_add(self.value,
                                  tuple(-c % f.p for c in other.value), f.p))

    def __neg__(self):
        f = self.field
        if f.m == 1:
            return FieldElem(f, -self.value % f.p)
        return f.element(tuple(-c % f.p for c in self.value))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if f.m == 1:
            return FieldElem(f, self.value * other.value % f.p)
        prod = _vec_mul(self.value, other.value, f.p)
        _, rem = _vec_divmod(prod, f.modulus, f.p)
        return f.element(rem)

    def inverse(self) -> "FieldElem":
        f = self.field
        if self.is_zero:
            raise DivisionByZero(f"inverse of zero in {f}")
        if f.m == 1:
            return FieldElem(f, pow(self.value, -1, f.p))
        return f.element(_vec_invmod(_trim(list(self.value)), f.modulus, f.p))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        f = self.field
        if f.m == 1:
            return FieldElem(f, pow(self.value, e, f.p))
        result, base = f.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"{self.value!r} in {self.field!r}"


def make_field(p: int, m: int, cap: int = DEFAULT_CARDINALITY_CAP) -> Field:
    """Build F_{p^m}.

    For m > 1 the modulus is the lexicographically smallest monic
    irreducible of degree m over F_p, scanning coefficient tuples
    (c_0, ..., c_{m-1}) in lexicographic order, so the same field is
    produced on every run and platform.
    """
    if not is_prime(p):
        raise NotPrime(p)
    if m < 1:
        raise DegreeOutOfRange(f"extension degree must be >= 1, got {m}")
    if p**m > cap:
        raise CapExceeded(f"|F| = {p}^{m} exceeds cap {cap}")
    if m == 1:
        return Field(p, 1, None)

    # polyfactor depends on Field for prime fields only; importing it
    # lazily here keeps the module graph acyclic.
    from .polyfactor import Poly, is_irreducible

    base = Field(p, 1, None)
    for low in itertools.product(range(p), repeat=m):
        candidate = Poly.from_ints(base, (*low, 1))
        if is_irreducible(candidate):
            return Field(p, m, (*low, 1))
    raise AssertionError("unreachable: an irreducible of every degree exists")
