"""Univariate polynomial arithmetic and factorization over finite fields.

Provides dense polynomials over a :class:`~covertwist.ffield.Field`,
complete factorization (squarefree decomposition, distinct-degree
splitting, Cantor-Zassenhaus equal-degree splitting), degree-divisor
extraction, and the bivariate covers P(T, Y) whose fibers the census
modules count.

Degree divisors are only ever read off distinct-degree parts, so the
counting paths are deterministic; randomness enters solely through the
explicit generator handed to :func:`equal_degree_split`.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from . import intpoly
from .errors import (
    BadInput,
    DegreeTooSmall,
    DivisionByZero,
    FieldMismatch,
    NotMonic,
    NotSquarefree,
)
from .ffield import Field, FieldElem


@dataclass(frozen=True, order=True)
class DegreeDivisor:
    """Multiset of part sizes (cycle type / residue-degree profile).

    Stored as a sorted tuple; rendered multiplicatively, e.g. the
    divisor {1, 1, 3} prints as ``1^2 3^1``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise BadInput(f"divisor parts must be >= 1: {self.parts}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts)))

    @classmethod
    def of(cls, parts) -> "DegreeDivisor":
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def __str__(self):
        mults = Counter(self.parts)
        return " ".join(f"{d}^{mults[d]}" for d in sorted(mults))

    @classmethod
    def parse(cls, text: str) -> "DegreeDivisor":
        parts = []
        for token in text.split():
            base, sep, exp = token.partition("^")
            try:
                d = int(base)
                e = int(exp) if sep else 1
            except ValueError:
                raise BadInput(f"bad divisor token {token!r}") from None
            if d < 1 or e < 1:
                raise BadInput(f"bad divisor token {token!r}")
            parts.extend([d] * e)
        if not parts:
            raise BadInput(f"empty degree divisor {text!r}")
        return cls(tuple(parts))


class Poly:
    """Dense univariate polynomial over a Field, lowest degree first.

    The zero polynomial is the empty coefficient tuple and has degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence[FieldElem]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, field: Field, ints: Sequence[int]) -> "Poly":
        return cls(field, [field.element(c) for c in ints])

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, [])

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, [field.zero, field.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        return Poly(self.field,
                    [(self.coeffs[i] if i < len(self.coeffs) else z)
                     + (other.coeffs[i] if i < len(other.coeffs) else z)
                     for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, c: FieldElem) -> "Poly":
        return Poly(self.field, [a * c for a in self.coeffs])

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = other.coeffs[-1].inverse()
        z = self.field.zero
        q = [z] * max(len(rem) - db, 0)
        for i in range(len(rem) - db - 1, -1, -1):
            coef = rem[i + db] * inv_lead
            if not coef.is_zero:
                q[i] = coef
                for j, bj in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - coef * bj
        return Poly(self.field, q), Poly(self.field, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.coeffs[-1].inverse())

    def derivative(self) -> "Poly":
        f = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            mult = f.element(i % f.p)
            out.append(self.coeffs[i] * mult)
        return Poly(f, out)

    def evaluate(self, x: FieldElem) -> FieldElem:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def pow_mod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly.from_ints(self.field, [1]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def text(self, var: str = "Y") -> str:
        """Compact rendering like ``Y^3+Y+5``, highest degree first."""
        if self.is_zero:
            return "0"
        pieces = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            cv = c.value
            body = var if i == 1 else (f"{var}^{i}" if i else "")
            if not body:
                body = str(cv)
            elif not (cv == 1 if isinstance(cv, int) else c == self.field.one):
                val = str(cv) if isinstance(cv, int) else "".join(map(str, cv))
                body = f"{val}*{body}"
            pieces.append(body if not pieces else "+" + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({self.text()} over {self.field!r})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor by Euclid's algorithm."""
    f._check(g)
    if f.is_zero and g.is_zero:
        raise BadInput("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def _pth_root(f: Poly) -> Poly:
    """Inverse Frobenius: the g with g(Y)^p = f(Y), given f in F_q[Y^p]."""
    F = f.field
    e = F.q // F.p  # a = b^p  <=>  b = a^(q/p)
    out = []
    for i in range(0, len(f.coeffs), F.p):
        out.append(f.coeffs[i] ** e)
    return Poly(F, out)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Write monic f as a product of coprime squarefree powers.

    Returns [(g_i, e_i)] with f = prod g_i^{e_i}, the g_i monic,
    squarefree and pairwise coprime, sorted by multiplicity then
    coefficients.  Characteristic p is handled by descending through
    p-th roots whenever the derivative vanishes.
    """
    if not f.is_monic:
        raise NotMonic("squarefree decomposition needs a monic polynomial")
    if f.degree < 1:
        raise NotMonic("squarefree decomposition needs a nonconstant polynomial")
    out: list[tuple[Poly, int]] = []
    _sqf_into(f, 1, out)
    out.sort(key=lambda ge: (ge[1], tuple(c.value for c in ge[0].coeffs)))
    return out


def _sqf_into(f: Poly, mult: int, out: list[tuple[Poly, int]]):
    if f.degree < 1:
        return
    df = f.derivative()
    if df.is_zero:
        _sqf_into(_pth_root(f), mult * f.field.p, out)
        return
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while not w.is_one:
        y = poly_gcd(w, c)
        z = w // y
        if not z.is_one:
            out.append((z, i * mult))
        i += 1
        w = y
        c = c // y
    if not c.is_one:
        _sqf_into(_pth_root(c), mult * f.field.p, out)


def is_squarefree(f: Poly) -> bool:
    if f.degree < 1:
        return True
    df = f.derivative()
    if df.is_zero:
        return False
    return poly_gcd(f, df).degree == 0


def distinct_degree(f: Poly) -> list[tuple[int, Poly]]:
    """Split monic squarefree f into products of equal-degree irreducibles.

    Returns [(d, h_d)] in ascending d, where h_d collects all irreducible
    factors of degree exactly d; computed by iterated gcd with Y^{q^d} - Y,
    dividing out each part as it is found.
    """
    if not f.is_monic:
        raise NotMonic("distinct-degree splitting needs a monic polynomial")
    if not is_squarefree(f):
        raise NotSquarefree("distinct-degree splitting needs squarefree input")
    F = f.field
    out = []
    h = f
    w = Poly.x(F) % h
    d = 0
    while h.degree > 0:
        d += 1
        if 2 * d > h.degree:
            out.append((h.degree, h))
            break
        w = w.pow_mod(F.q, h)
        g = poly_gcd(h, w - Poly.x(F))
        if g.degree > 0:
            out.append((d, g))
            h = h // g
            w = w % h
    return out


def equal_degree_split(h: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Complete factorization of h, all of whose factors have degree d.

    Cantor-Zassenhaus; odd q uses the (q^d - 1)/2 power, even q the
    trace map over F_2.  The caller owns the random generator, so runs
    are reproducible from the recorded seed.
    """
    if h.degree <= d or h.degree % d != 0 or not h.is_monic:
        raise BadInput(f"need monic h with deg(h) a multiple of d and > d, "
                       f"got deg {h.degree}, d = {d}")
    if not is_squarefree(h):
        raise BadInput("equal-degree splitting needs squarefree input")
    F = h.field
    found: list[Poly] = []
    stack = [h]
    while stack:
        g = stack.pop()
        if g.degree == d:
            found.append(g)
            continue
        s = _edf_try(g, d, rng)
        while s is None:
            s = _edf_try(g, d, rng)
        stack.extend(s)
    found.sort(key=lambda f: tuple(c.value for c in f.coeffs))
    return found


def _edf_try(g: Poly, d: int, rng: random.Random) -> Optional[list[Poly]]:
    F = g.field
    r = Poly.from_ints(F, [rng.randrange(F.p) for _ in range(g.degree)])
    if F.m > 1:
        r = Poly(F, [F.element([rng.randrange(F.p) for _ in range(F.m)])
                     for _ in range(g.degree)])
    if r.is_zero:
        return None
    if F.q % 2 == 1:
        s = r.pow_mod((F.q**d - 1) // 2, g)
        cand = s - Poly.from_ints(F, [1])
    else:
        # trace map sum_{i < d*log2(q)} r^(2^i)
        k = d * (F.q.bit_length() - 1)
        t = r % g
        u = t
        for _ in range(k - 1):
            u = (u * u) % g
            t = (t + u) % g
        cand = t
    split = poly_gcd(g, cand) if not cand.is_zero else Poly.zero(F)
    if split.is_zero or split.degree == 0 or split.degree == g.degree:
        return None
    return [split, g // split]


def factor(f: Poly, rng: Optional[random.Random] = None) -> list[tuple[Poly, int]]:
    """Complete factorization of nonzero f into monic irreducibles.

    Returns [(g, multiplicity)] sorted by degree then coefficients,
    together with the unit folded away (f must be monicized by the
    caller if the leading unit matters).
    """
    if f.is_zero:
        raise BadInput("cannot factor the zero polynomial")
    if rng is None:
        rng = random.Random(0)
    g = f.monic()
    if g.degree < 1:
        return []
    result: list[tuple[Poly, int]] = []
    for part, e in squarefree_decomposition(g):
        for d, h in distinct_degree(part):
            if h.degree == d:
                result.append((h, e))
            else:
                for irr in equal_degree_split(h, d, rng):
                    result.append((irr, e))
    result.sort(key=lambda ge: (ge[0].degree,
                                tuple(c.value for c in ge[0].coeffs)))
    return result


def is_irreducible(f: Poly) -> bool:
    """True iff nonconstant f is irreducible over its field."""
    if f.degree < 1:
        raise BadInput("irreducibility is about nonconstant polynomials")
    g = f.monic()
    if g.degree == 1:
        return True
    if not is_squarefree(g):
        return False
    parts = distinct_degree(g)
    return len(parts) == 1 and parts[0][0] == g.degree


def degree_divisor(f: Poly) -> DegreeDivisor:
    """Residue-degree profile of a monic squarefree polynomial.

    Raises NotSquarefree on ramified input so callers can bucket those
    fibers instead of silently misreporting them.
    """
    if not f.is_monic:
        raise NotMonic("degree divisor needs a monic polynomial")
    if not is_squarefree(f):
        raise NotSquarefree("ramified: input is not squarefree")
    parts = []
    for d, h in distinct_degree(f):
        parts.extend([d] * (h.degree // d))
    return DegreeDivisor.of(parts)


# -- bivariate covers --------------------------------------------------------

class BiPoly:
    """Integer polynomial P(T, Y) defining a cover of the projective line.

    Stored as a coefficient matrix rows[i][j] = coefficient of T^i Y^j,
    with no all-zero trailing rows or columns and deg_Y >= 1.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        mat = [list(map(int, r)) for r in rows]
        width = max((len(r) for r in mat), default=0)
        for r in mat:
            r.extend([0] * (width - len(r)))
        while mat and not any(mat[-1]):
            mat.pop()
        while mat and all(r[-1] == 0 for r in mat):
            for r in mat:
                r.pop()
        if not mat or len(mat[0]) < 2:
            raise BadInput("a cover polynomial needs deg_Y >= 1")
        self.rows = tuple(tuple(r) for r in mat)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int]) -> "BiPoly":
        if not terms:
            raise BadInput("empty polynomial")
        dt = max(i for i, _ in terms)
        dy = max(j for _, j in terms)
        rows = [[terms.get((i, j), 0) for j in range(dy + 1)]
                for i in range(dt + 1)]
        return cls(rows)

    @property
    def deg_t(self) -> int:
        return len(self.rows) - 1

    @property
    def deg_y(self) -> int:
        return len(self.rows[0]) - 1

    def y_coeff(self, j: int) -> intpoly.IntPoly:
        """Coefficient of Y^j, as a polynomial in T."""
        return intpoly.trim([r[j] for r in self.rows])

    def y_leading(self) -> intpoly.IntPoly:
        return self.y_coeff(self.deg_y)

    def at_t(self, t0: int) -> list[int]:
        """Integer coefficient list of P(t0, Y), length deg_Y + 1."""
        return [intpoly.evaluate(self.y_coeff(j), t0)
                for j in range(self.deg_y + 1)]

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        terms = []
        for j in range(self.deg_y, -1, -1):
            for i in range(self.deg_t, -1, -1):
                c = self.rows[i][j]
                if c:
                    terms.append((c, i, j))
        pieces = []
        for c, i, j in terms:
            body = []
            if i:
                body.append("T" if i == 1 else f"T^{i}")
            if j:
                body.append("Y" if j == 1 else f"Y^{j}")
            if not body:
                body = [str(abs(c))]
            elif abs(c) != 1:
                body.insert(0, str(abs(c)))
            text = "*".join(body)
            if not pieces:
                pieces.append(text if c > 0 else "-" + text)
            else:
                pieces.append(("+" if c > 0 else "-") + text)
        return "".join(pieces)

    def __repr__(self):
        return f"BiPoly({self})"


class Specialization(NamedTuple):
    poly: Poly
    degree_drop: bool


def specialize(P: BiPoly, t0: FieldElem) -> Specialization:
    """The fiber polynomial P(t0, Y) over t0's field.

    Integer coefficients reduce through F_p into the field; the
    degree_drop flag reports a vanished leading Y-coefficient (a
    degenerate fiber the census buckets as ramified).
    """
    F = t0.field
    coeffs = []
    for j in range(P.deg_y + 1):
        acc = F.zero
        for c in reversed(P.y_coeff(j) or (0,)):
            acc = acc * t0 + F.element(c % F.p)
        coeffs.append(acc)
    drop = coeffs[-1].is_zero
    return Specialization(Poly(F, coeffs), drop)


def disc_y(P: BiPoly) -> intpoly.IntPoly:
    """Discriminant of P with respect to Y, a polynomial in T over Z.

    Sylvester resultant of P and dP/dY with the standard normalization
    (-1)^(n(n-1)/2) * Res(P, P_Y) / lc_Y(P); the division is exact.
    """
    n = P.deg_y
    if n < 2:
        raise DegreeTooSmall("discriminant needs deg_Y >= 2")
    f = [P.y_coeff(j) for j in range(n + 1)]          # f[j] multiplies Y^j
    fy = [intpoly.mul((j,), f[j]) for j in range(1, n + 1)]
    dim = 2 * n - 1
    matrix: list[list[intpoly.IntPoly]] = [[()] * dim for _ in range(dim)]
    for i in range(n - 1):                            # rows of P
        for j in range(n + 1):
            matrix[i][i + j] = f[n - j]
    for i in range(n):                                # rows of dP/dY
        for j in range(n):
            matrix[n - 1 + i][i + j] = fy[n - 1 - j]
    res = intpoly.bareiss_det(matrix)
    if not res:
        return ()
    disc = intpoly.divexact(res, P.y_leading())
    if (n * (n - 1) // 2) % 2:
        disc = intpoly.neg(disc)
    return disc


def all_monic(field: Field, deg: int):
    """All monic polynomials of exact degree deg, in lexicographic order."""
    for low in itertools.product(list(field.elements()), repeat=deg):
        yield Poly(field, (*low, field.one))
