"""Dense univariate polynomials over Z (and Q where noted).

Coefficients are plain int tuples, lowest degree first; the zero
polynomial is the empty tuple.  Everything here is exact: Bareiss
elimination keeps determinants in Z[T], and squarefree parts over Q
come back as primitive integer polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

IntPoly = tuple[int, ...]


def trim(c: Sequence[int]) -> IntPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(a: IntPoly) -> int:
    return len(a) - 1  # -1 for the zero polynomial


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n)])


def neg(a: IntPoly) -> IntPoly:
    return tuple(-c for c in a)


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return add(a, neg(b))


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(out)


def divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a / b, which must be exact in Z[T]."""
    if not b:
        raise ZeroDivisionError("exact division by zero polynomial")
    if not a:
        return ()
    rem = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        lead = rem[i + len(b) - 1]
        coef, r = divmod(lead, b[-1])
        if r:
            raise ArithmeticError("division is not exact in Z[T]")
        q[i] = coef
        for j, bj in enumerate(b):
            rem[i + j] -= coef * bj
    if any(rem):
        raise ArithmeticError("division is not exact in Z[T]")
    return trim(q)


def derivative(a: IntPoly) -> IntPoly:
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a: IntPoly, t: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * t + c
    return acc


def content(a: IntPoly) -> int:
    return math.gcd(*a) if a else 0


def primitive(a: IntPoly) -> IntPoly:
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    c = content(a)
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def reduce_mod(a: IntPoly, p: int) -> IntPoly:
    return trim([c % p for c in a])


def _qdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] / b[-1]
        q[i] = coef
        for j, bj in enumerate(b):
            a[i + j] -= coef * bj
    while a and a[-1] == 0:
        a.pop()
    return q, a


def gcd_q(a: IntPoly, b: IntPoly) -> IntPoly:
    """gcd over Q, returned as a primitive integer polynomial."""
    r0 = [Fraction(c) for c in a]
    r1 = [Fraction(c) for c in b]
    while r1:
        _, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
    if not r0:
        return ()
    denom = math.lcm(*(c.denominator for c in r0))
    return primitive(trim([int(c * denom) for c in r0]))


def squarefree_part_q(a: IntPoly) -> IntPoly:
    """Radical of a over Q (primitive integer polynomial)."""
    if not a:
        raise ZeroDivisionError("squarefree part of the zero polynomial")
    if degree(a) == 0:
        return (1,)
    g = gcd_q(a, derivative(a))
    if degree(g) == 0:
        return primitive(a)
    num, rem = _qdivmod([Fraction(c) for c in a], [Fraction(c) for c in g])
    assert not rem
    denom = math.lcm(*(c.denominator for c in num))
    return primitive(trim([int(c * denom) for c in num]))


def bareiss_det(matrix: list[list[IntPoly]]) -> IntPoly:
    """Determinant of a matrix over Z[T] by fraction-free elimination."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    prev: IntPoly = (1,)
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]))
                m[i][j] = divexact(num, prev)
            m[i][k] = ()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else neg(det)
