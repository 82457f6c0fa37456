"""Permutations, enumerated groups, conjugacy, and homomorphism tables.

Groups live fully enumerated (everything here fits in S_8), elements in
canonical sorted order so every search and representative choice is
reproducible.  Homomorphisms carry full mapping tables, making
well-definedness a one-time check and membership O(1).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BadInput,
    CapExceeded,
    DegreeMismatch,
    DomainMismatch,
    NotAHomomorphism,
    NotASubgroup,
)
from .polyfactor import DegreeDivisor

ENUMERATION_CAP = 100_000


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of {1..n}, stored 0-based as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise BadInput(f"not a bijection of 0..{len(self.images) - 1}: "
                           f"{self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Perm":
        """Build from 1-based cycles, e.g. [(1, 2, 3), (4, 5)]."""
        images = list(range(degree))
        for cyc in cycles:
            pts = [c - 1 for c in cyc]
            if len(set(pts)) != len(pts):
                raise BadInput(f"repeated point in cycle {tuple(cyc)}")
            if any(x < 0 or x >= degree for x in pts):
                raise DegreeMismatch(f"cycle {tuple(cyc)} exceeds degree {degree}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition self o other: apply other first."""
        if self.degree != other.degree:
            raise DegreeMismatch("composing permutations of different degrees")
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def __pow__(self, e: int) -> "Perm":
        if e < 0:
            return self.inverse() ** (-e)
        result = Perm.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate_by(self, g: "Perm") -> "Perm":
        return g * self * g.inverse()

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> DegreeDivisor:
        """All cycle lengths including fixed points as 1s."""
        lengths = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            ln = 0
            i = start
            while not seen[i]:
                seen[i] = True
                ln += 1
                i = self.images[i]
            lengths.append(ln)
        return DegreeDivisor.of(lengths)

    def order(self) -> int:
        return math.lcm(*(self.cycle_type().parts))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm{str(self)}@{self.degree}"


def cycle_type(s: Perm) -> DegreeDivisor:
    return s.cycle_type()


class PermGroup:
    """A finite permutation group with its elements fully enumerated."""

    __slots__ = ("degree", "generators", "elements", "_index", "_words",
                 "_matrix_cache")

    def __init__(self, degree, generators, elements, words):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._words = words
        self._matrix_cache = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def __contains__(self, perm: Perm) -> bool:
        return perm in self._index

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "-"
        return f"PermGroup(degree={self.degree}, order={self.order}, <{gens}>)"

    def word_for(self, perm: Perm) -> tuple[int, ...]:
        """Generator indices whose left-to-right product is perm."""
        return self._words[perm]

    @property
    def matrix(self) -> np.ndarray:
        """(order, degree) image table, rows in canonical element order."""
        if self._matrix_cache is None:
            self._matrix_cache = np.array([e.images for e in self.elements],
                                          dtype=np.int64)
        return self._matrix_cache

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return (self.degree == other.degree
                and all(e in other for e in self.elements))


def generate(gens: Sequence[Perm], degree: Optional[int] = None,
             cap: int = ENUMERATION_CAP) -> PermGroup:
    """Breadth-first closure of the generators under composition."""
    gens = list(gens)
    if degree is None:
        if not gens:
            raise BadInput("need an explicit degree for the empty generator list")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise DegreeMismatch("generators have mixed degrees")
    ident = Perm.identity(degree)
    words: dict[Perm, tuple[int, ...]] = {ident: ()}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for j, g in enumerate(gens):
            y = x * g
            if y not in words:
                if len(words) >= cap:
                    raise CapExceeded(f"group closure exceeds cap {cap}")
                words[y] = words[x] + (j,)
                queue.append(y)
    return PermGroup(degree, gens, words.keys(), words)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> PermGroup:
    if n < 1:
        raise BadInput("degree must be >= 1")
    if n == 1:
        return generate([], degree=1)
    if n == 2:
        return generate([Perm.from_cycles([(1, 2)], 2)])
    gens = [Perm.from_cycles([(1, 2)], n),
            Perm.from_cycles([tuple(range(1, n + 1))], n)]
    return generate(gens)


def centralizer_order(G: PermGroup, S: Iterable[Perm]) -> int:
    """|{g in G : gs = sg for all s in S}| by direct scan."""
    S = list(S)
    for s in S:
        if s.degree != G.degree:
            raise DegreeMismatch("centralized elements live in another degree")
    M = G.matrix
    mask = np.ones(len(M), dtype=bool)
    for s in S:
        arr = np.array(s.images, dtype=np.int64)
        mask &= (M[:, arr] == arr[M]).all(axis=1)
    return int(mask.sum())


def class_size_sn(t: DegreeDivisor) -> int:
    """Size of the S_n conjugacy class of cycle type t, n = sum of parts."""
    n = t.n
    denom = 1
    for d, a in t.multiplicities().items():
        denom *= d**a * math.factorial(a)
    return math.factorial(n) // denom


def conjugacy_classes(G: PermGroup) -> list[tuple[Perm, ...]]:
    """Partition of G into conjugacy classes, canonically ordered."""
    remaining = set(G.elements)
    classes = []
    gens = G.generators or (G.identity,)
    while remaining:
        seed = min(remaining)
        orbit = {seed}
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = x.conjugate_by(g)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        remaining -= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: c[0])
    return classes


def cc(G: PermGroup) -> int:
    """Number of nontrivial conjugacy classes."""
    return len(conjugacy_classes(G)) - 1


def is_normal(N: PermGroup, G: PermGroup) -> bool:
    """True iff gNg^-1 = N for every generator g of G."""
    if not N.is_subgroup_of(G):
        raise NotASubgroup("first group is not contained in the second")
    nset = set(N.elements)
    for g in G.generators:
        if {x.conjugate_by(g) for x in nset} != nset:
            return False
    return True


class GroupHom:
    """A homomorphism as a full element table.

    The table must cover every domain element, send identity to
    identity, and be multiplicative; construction verifies all of it
    (multiplicativity over element-generator pairs, which induction
    extends to all products).
    """

    __slots__ = ("domain", "codomain_degree", "table")

    def __init__(self, domain: PermGroup, codomain_degree: int,
                 table: dict[Perm, Perm]):
        if set(table) != set(domain.elements):
            raise NotAHomomorphism("table does not cover the domain exactly")
        for img in table.values():
            if img.degree != codomain_degree:
                raise DegreeMismatch("image degree differs from codomain degree")
        if not table[domain.identity].is_identity:
            raise NotAHomomorphism("identity does not map to identity")
        for x in domain.elements:
            fx = table[x]
            for g in domain.generators:
                if table[x * g] != fx * table[g]:
                    raise NotAHomomorphism(
                        f"table({x}{g}) != table({x})table({g})")
        self.domain = domain
        self.codomain_degree = codomain_degree
        self.table = dict(table)

    def __call__(self, x: Perm) -> Perm:
        return self.table[x]

    def image(self) -> frozenset[Perm]:
        return frozenset(self.table.values())

    def is_injective(self) -> bool:
        return len(self.image()) == self.domain.order

    def gen_images(self) -> tuple[Perm, ...]:
        return tuple(self.table[g] for g in self.domain.generators)

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and self.domain == other.domain
                and self.codomain_degree == other.codomain_degree
                and self.table == other.table)

    def __hash__(self):
        return hash((self.domain, self.codomain_degree,
                     tuple(sorted(self.table.items()))))

    def __repr__(self):
        maps = "; ".join(f"{g} -> {self.table[g]}" for g in self.domain.generators)
        return f"GroupHom({maps or 'trivial'})"


def identity_hom(G: PermGroup) -> GroupHom:
    return GroupHom(G, G.degree, {x: x for x in G.elements})


def hom_from_images(domain: PermGroup, gen_images: Sequence[Perm]) -> GroupHom:
    """Extend generator images along the BFS words of the domain.

    Raises NotAHomomorphism when two words for the same element would
    need different images (the GroupHom constructor's multiplicativity
    sweep catches every such relation violation).
    """
    gen_images = list(gen_images)
    if len(gen_images) != len(domain.generators):
        raise BadInput("need exactly one image per generator")
    if gen_images:
        cd = gen_images[0].degree
        if any(g.degree != cd for g in gen_images):
            raise DegreeMismatch("generator images have mixed degrees")
    else:
        cd = domain.degree
    table = {}
    for x in domain.elements:
        img = Perm.identity(cd)
        for j in domain.word_for(x):
            img = img * gen_images[j]
        table[x] = img
    return GroupHom(domain, cd, table)


def compose_homs(outer: GroupHom, inner: GroupHom) -> GroupHom:
    """outer o inner; inner's images must lie in outer's domain."""
    for img in inner.table.values():
        if img not in outer.domain:
            raise DomainMismatch("inner image escapes the outer domain")
    table = {x: outer(inner(x)) for x in inner.domain.elements}
    return GroupHom(inner.domain, outer.codomain_degree, table)


def conjugated_hom(w: Perm, hom: GroupHom) -> GroupHom:
    """conj(w) o hom."""
    wi = w.inverse()
    return GroupHom(hom.domain, hom.codomain_degree,
                    {x: w * hom(x) * wi for x in hom.domain.elements})


def simultaneous_conjugacy(f: GroupHom, g: GroupHom,
                           ambient: PermGroup) -> Optional[Perm]:
    """Least sigma in ambient with f(h) = sigma g(h) sigma^-1 for all h.

    Checking the domain generators suffices since both sides are
    homomorphisms; the scan runs in ambient's canonical element order,
    so the returned witness is reproducible.
    """
    if f.domain != g.domain:
        raise DomainMismatch("homomorphisms have different domains")
    if f.codomain_degree != ambient.degree or g.codomain_degree != ambient.degree:
        raise DegreeMismatch("homomorphism images do not live in the ambient degree")
    pairs = [(f(h), g(h)) for h in f.domain.generators]
    for sigma in ambient.elements:
        si = sigma.inverse()
        if all(fi == sigma * gi * si for fi, gi in pairs):
            return sigma
    return None
