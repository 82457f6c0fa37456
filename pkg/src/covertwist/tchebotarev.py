"""Census of fiber profiles over F_q and the counting estimate checks.

For a cover P(T, Y) and every t0 in F_q, the census classifies the
fiber P(t0, Y) as ramified (degree drop or repeated factors) or records
its degree divisor.  Verdicts compare each observed count N against the
main term (q + 1) |class| / n! with error bound r n! sqrt(q); the
comparison is done in exact integer arithmetic, floats only decorate
the report.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from . import kernels
from .errors import (
    BadInput,
    CapExceeded,
    InseparableCover,
    NotPrime,
    NotSquarefree,
)
from .ffield import Field, is_prime, make_field
from .intpoly import reduce_mod
from .permgroup import class_size_sn
from .polyfactor import (
    BiPoly,
    DegreeDivisor,
    Poly,
    degree_divisor,
    disc_y,
    factor,
    specialize,
    squarefree_decomposition,
)

DEFAULT_CENSUS_CAP = 1 << 22


def branch_bound(P: BiPoly, F: Optional[Field] = None) -> int:
    """Upper bound r on the number of branch points of the cover.

    r = deg(squarefree part of disc_y(P)) + 1; the +1 conservatively
    admits a branch point at infinity.  With F given the discriminant
    is reduced into characteristic p first; F None works over Q.
    """
    disc = disc_y(P)
    if F is None:
        if not disc:
            raise InseparableCover("disc_y vanishes identically over Q")
        from .intpoly import squarefree_part_q
        return len(squarefree_part_q(disc)) - 1 + 1
    dmod = reduce_mod(disc, F.p)
    if not dmod:
        raise InseparableCover(f"disc_y vanishes identically mod {F.p}")
    base = make_field(F.p, 1)
    dpoly = Poly.from_ints(base, dmod).monic()
    if dpoly.degree == 0:
        return 1
    radical_degree = sum(g.degree for g, _ in squarefree_decomposition(dpoly))
    return radical_degree + 1


@dataclass(frozen=True)
class Verdict:
    divisor: DegreeDivisor
    observed: int
    main_term: float
    error_bound: float
    passed: bool
    genus_bound: float


@dataclass
class CensusReport:
    q: int
    n: int
    poly_text: str
    r: Optional[int]
    counts: dict[DegreeDivisor, int]
    ramified: int
    seed: Optional[int] = None
    assumed_geometric_monodromy: str = "full-symmetric (user-asserted)"
    backend: str = kernels.BACKEND
    verdicts: dict[DegreeDivisor, Verdict] = field(default_factory=dict)
    fiber_factors: Optional[list[tuple[str, str]]] = None

    def __post_init__(self):
        total = sum(self.counts.values()) + self.ramified
        assert total == self.q, f"census partition broken: {total} != {self.q}"


def _census_kernel(P: BiPoly, F: Field, threads: int) -> tuple[dict, int]:
    p = F.p
    M = kernels.coeff_matrix(P, p)
    if threads <= 1 or p < 4 * threads:
        codes = kernels.profile_codes_range(M, p, 0, p)
    else:
        bounds = [round(i * p / threads) for i in range(threads + 1)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(
                lambda se: kernels.profile_codes_range(M, p, se[0], se[1]),
                zip(bounds, bounds[1:])))
        codes = np.concatenate(chunks)
    values, freq = np.unique(codes, return_counts=True)
    counts: dict[DegreeDivisor, int] = {}
    ramified = 0
    n = P.deg_y
    for v, c in zip(values.tolist(), freq.tolist()):
        if v == kernels.RAMIFIED:
            ramified = int(c)
        else:
            counts[DegreeDivisor.of(kernels.decode_code(v, n))] = int(c)
    return counts, ramified


def _census_generic(P: BiPoly, F: Field, full_factor: bool,
                    seed: Optional[int]):
    counts: dict[DegreeDivisor, int] = {}
    ramified = 0
    listing: list[tuple] = []
    rng = random.Random(0 if seed is None else seed)
    for t0 in F.elements():
        fiber = specialize(P, t0)
        label = str(t0.value)
        if fiber.degree_drop:
            ramified += 1
            continue
        f = fiber.poly.monic()
        try:
            dd = degree_divisor(f)
        except NotSquarefree:
            ramified += 1
            continue
        counts[dd] = counts.get(dd, 0) + 1
        if full_factor:
            facs = factor(f, rng)
            listing.append((label, " * ".join(
                f"({fac.text()})^{e}" if e > 1 else f"({fac.text()})"
                for fac, e in facs)))
    return counts, ramified, (listing if full_factor else None)


def census(P: BiPoly, F: Field, cap: int = DEFAULT_CENSUS_CAP,
           threads: int = 1, full_factor: bool = False,
           seed: Optional[int] = None) -> CensusReport:
    """Classify every fiber of P over F_q.

    Per point: degree drop or a repeated factor lands in the ramified
    bucket, everything else records its degree divisor.  Prime fields
    below the kernel limits run on the compiled census path (threaded
    over disjoint t0 ranges, merged deterministically); extension
    fields and oversized degrees fall back to the generic object path.
    Requesting the full factorization forces the generic path, with the
    seed recorded in the report.
    """
    q = F.q
    if q > cap:
        raise CapExceeded(f"census over q = {q} exceeds cap {cap}")
    n = P.deg_y
    if n < 2:
        raise BadInput("census needs a cover of fiber degree >= 2")
    try:
        r = branch_bound(P, F)
    except InseparableCover:
        r = None
    listing = None
    if not full_factor and kernels.kernel_eligible(F.p, F.m, n):
        counts, ramified = _census_kernel(P, F, threads)
    else:
        counts, ramified, listing = _census_generic(P, F, full_factor, seed)
    return CensusReport(q=q, n=n, poly_text=str(P), r=r, counts=counts,
                        ramified=ramified,
                        seed=seed if full_factor else None,
                        fiber_factors=listing)


def tcheb_check(report: CensusReport, t: DegreeDivisor) -> Verdict:
    """Verdict for one degree divisor against the counting estimate.

    Exact test: (n! N - (q+1) |t|)^2 <= (r n!^2)^2 q.  The reported
    main term, bound and genus bound are floats for display only.
    """
    n, q = report.n, report.q
    if t.n != n:
        raise BadInput(f"divisor {t} does not sum to the fiber degree {n}")
    if report.r is None:
        raise InseparableCover("no branch bound: discriminant vanished")
    cls = class_size_sn(t)
    nfact = math.factorial(n)
    N = report.counts.get(t, 0)
    lhs = (nfact * N - (q + 1) * cls) ** 2
    rhs = (report.r * nfact * nfact) ** 2 * q
    main = Fraction((q + 1) * cls, nfact)
    bound = report.r * nfact * math.sqrt(q)
    genus_bound = (report.r - 2) * (nfact - 1) / 2
    verdict = Verdict(divisor=t, observed=N, main_term=float(main),
                      error_bound=bound, passed=lhs <= rhs,
                      genus_bound=genus_bound)
    report.verdicts[t] = verdict
    return verdict


class ChowlaResult(NamedTuple):
    count: int
    ratio: float          # p / n, the predicted density
    hypothesis_ok: bool   # False when p divides n(n-1)


def chowla_count(n: int, p: int) -> ChowlaResult:
    """Number of a in F_p with Y^n + Y + a irreducible.

    Counted through the census of the trinomial cover Y^n + Y - T,
    whose fibers at t0 = -a are exactly the trinomials; irreducible
    means the degree divisor is the single part n.  The flag warns when
    p | n(n-1), where the covering theory behind the estimate breaks.
    """
    if n < 2:
        raise BadInput("trinomial degree must be >= 2")
    if not is_prime(p):
        raise NotPrime(p)
    P = BiPoly.from_terms({(0, n): 1, (0, 1): 1, (1, 0): -1})
    report = census(P, make_field(p, 1), cap=max(DEFAULT_CENSUS_CAP, p + 1))
    count = report.counts.get(DegreeDivisor.of([n]), 0)
    return ChowlaResult(count, p / n, (n * (n - 1)) % p != 0)
