"""Local-global constructions over Q: good primes, residue plans,
CRT-assembled arithmetic progressions, and irreducibility certificates.

A residue plan fixes, at one good prime p, a class b_p mod p whose
fibers all carry a prescribed degree divisor; plans at distinct primes
combine by CRT into a progression a*m + b along which every sample can
be checked locally (per-prime divisors) and globally (irreducibility
certified by reduction at an auxiliary prime).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from . import intpoly, kernels
from .errors import (
    BadInput,
    DegreeDrop,
    DuplicatePrime,
    InseparableCover,
    NoResidue,
    NotEnoughPrimes,
)
from .ffield import is_prime, make_field
from .polyfactor import (
    BiPoly,
    DegreeDivisor,
    Poly,
    degree_divisor,
    disc_y,
    is_irreducible,
)
from .errors import NotSquarefree
from .tchebotarev import branch_bound

GOODNESS_CHECKS = ("leading_coefficient_survives",
                   "discriminant_degree_preserved",
                   "radical_stays_squarefree")


@dataclass(frozen=True)
class GoodPrime:
    p: int
    checks: dict[str, bool]

    @property
    def good(self) -> bool:
        return all(self.checks.values())


@dataclass(frozen=True)
class PrimePlan:
    p: int
    target: DegreeDivisor
    residue: int
    certificate: dict[str, bool]
    meets_bound: bool


class BetaPlans(NamedTuple):
    plans: tuple[PrimePlan, ...]
    beta: int


@dataclass(frozen=True)
class Progression:
    modulus: int
    residue: int
    plans: tuple[PrimePlan, ...]
    beta_plans: tuple[PrimePlan, ...]
    beta: int

    def __post_init__(self):
        assert 0 <= self.residue < self.modulus
        for plan in self.plans + self.beta_plans:
            assert self.residue % plan.p == plan.residue


def certify_prime(P: BiPoly, p: int) -> GoodPrime:
    """Goodness certificate for p: the reduction mod p keeps the leading
    Y-coefficient, the discriminant degree, and a squarefree radical.

    A sufficient criterion: failing primes may or may not be genuinely
    bad, passing primes are safe for every local argument used here.
    """
    if not is_prime(p):
        raise BadInput(f"{p} is not prime")
    disc = disc_y(P)
    if not disc:
        raise InseparableCover("disc_y vanishes identically over Q")
    lead = P.y_leading()
    checks = {}
    checks["leading_coefficient_survives"] = bool(intpoly.reduce_mod(lead, p))
    dmod = intpoly.reduce_mod(disc, p)
    checks["discriminant_degree_preserved"] = (
        intpoly.degree(dmod) == intpoly.degree(disc))
    rad = intpoly.squarefree_part_q(disc)
    rad_mod = intpoly.reduce_mod(rad, p)
    if intpoly.degree(rad_mod) != intpoly.degree(rad):
        checks["radical_stays_squarefree"] = False
    elif intpoly.degree(rad_mod) == 0:
        checks["radical_stays_squarefree"] = True
    else:
        base = make_field(p, 1)
        rpoly = Poly.from_ints(base, rad_mod)
        from .polyfactor import is_squarefree
        checks["radical_stays_squarefree"] = is_squarefree(rpoly.monic())
    return GoodPrime(p, checks)


def good_primes(P: BiPoly, lo: int, hi: int) -> list[GoodPrime]:
    """All good primes in [lo, hi], each with its certificate."""
    out = []
    for p in range(max(lo, 2), hi + 1):
        if not is_prime(p):
            continue
        gp = certify_prime(P, p)
        if gp.good:
            out.append(gp)
    return out


def bound_m0(P: BiPoly) -> int:
    """The prime threshold 4 r^2 (n!)^2 above which residues must exist."""
    r = branch_bound(P)
    n = P.deg_y
    return 4 * r * r * math.factorial(n) ** 2


def _divisor_at(P: BiPoly, p: int, b: int) -> Optional[DegreeDivisor]:
    """Degree divisor of the fiber at b mod p, None when ramified."""
    base = make_field(p, 1)
    coeffs = [c % p for c in P.at_t(b)]
    if coeffs[-1] == 0:
        return None
    f = Poly.from_ints(base, coeffs).monic()
    try:
        return degree_divisor(f)
    except NotSquarefree:
        return None


def find_residue(P: BiPoly, p: int, target: DegreeDivisor,
                 block: int = 1 << 16) -> PrimePlan:
    """Smallest b in [0, p) whose fiber mod p has the target divisor.

    Requires a good prime.  When no residue exists the error records
    whether p sits below the 4 r^2 (n!)^2 bound: below it the theory is
    silent, at or above it the existence guarantee has been falsified
    and callers should abort loudly.
    """
    n = P.deg_y
    if target.n != n:
        raise BadInput(f"target {target} does not sum to deg_Y = {n}")
    gp = certify_prime(P, p)
    if not gp.good:
        raise BadInput(f"{p} is not a good prime for {P}")
    m0 = bound_m0(P)
    residue = None
    if kernels.kernel_eligible(p, 1, n):
        code = kernels.encode_parts(target.parts, n)
        M = kernels.coeff_matrix(P, p)
        for start in range(0, p, block):
            codes = kernels.profile_codes_range(M, p, start, min(start + block, p))
            hits = (codes == code).nonzero()[0]
            if hits.size:
                residue = start + int(hits[0])
                break
    else:
        for b in range(p):
            if _divisor_at(P, p, b) == target:
                residue = b
                break
    if residue is None:
        raise NoResidue(p, target, below_bound=p < m0, good=True)
    return PrimePlan(p=p, target=target, residue=residue,
                     certificate=gp.checks, meets_bound=p >= m0)


def observed_types(P: BiPoly, primes: Sequence[int]) -> dict[DegreeDivisor, int]:
    """Divisors observed across full censuses at the given good primes.

    A lower bound on the set of types realized by the cover; evidence
    for the hypothesis that a requested target is the type of an actual
    monodromy element.
    """
    from .tchebotarev import census
    out: dict[DegreeDivisor, int] = {}
    for p in primes:
        gp = certify_prime(P, p)
        if not gp.good:
            raise BadInput(f"{p} is not a good prime for {P}")
        rep = census(P, make_field(p, 1))
        for dd, c in rep.counts.items():
            out[dd] = out.get(dd, 0) + c
    return dict(sorted(out.items()))


def beta_plans(P: BiPoly, class_types: Sequence[DegreeDivisor], floor: int,
               exclude: Sequence[int] = (), search_limit: Optional[int] = None
               ) -> BetaPlans:
    """One plan per nontrivial conjugacy-class type, at distinct good
    primes at or above floor; beta is the product of the chosen primes.

    The class types come from the user (the cycle types of one
    representative per nontrivial class of the geometric monodromy
    group); their count is the number of such classes.  floor must be
    at least the 4 r^2 (n!)^2 bound so the residues are guaranteed.
    """
    m0 = bound_m0(P)
    if floor < m0:
        raise BadInput(f"floor {floor} is below the bound {m0}")
    if search_limit is None:
        search_limit = max(2 * floor, floor + 100_000)
    used = set(exclude)
    plans = []
    p = floor - 1
    for t in class_types:
        plan = None
        while plan is None:
            p += 1
            if p > search_limit:
                raise NotEnoughPrimes(
                    f"no good prime left in [{floor}, {search_limit}]")
            if p in used or not is_prime(p):
                continue
            if not certify_prime(P, p).good:
                continue
            plan = find_residue(P, p, t)
        used.add(p)
        plans.append(plan)
    beta = math.prod(plan.p for plan in plans)
    return BetaPlans(tuple(plans), beta)


def build_progression(plans: Sequence[PrimePlan],
                      beta: BetaPlans | Sequence[PrimePlan] = ()
                      ) -> Progression:
    """CRT-combine the plans into the progression a*m + b."""
    bplans = tuple(beta.plans) if isinstance(beta, BetaPlans) else tuple(beta)
    all_plans = tuple(plans) + bplans
    primes = [plan.p for plan in all_plans]
    if len(set(primes)) != len(primes):
        raise DuplicatePrime(f"plans reuse a prime: {sorted(primes)}")
    modulus = math.prod(primes) if primes else 1
    residue = 0
    for plan in all_plans:
        rest = modulus // plan.p
        residue += plan.residue * rest * pow(rest, -1, plan.p)
    residue %= modulus
    return Progression(modulus=modulus, residue=residue, plans=tuple(plans),
                       beta_plans=bplans,
                       beta=math.prod(p.p for p in bplans) if bplans else 1)


def hilbert_certificate(P: BiPoly, t0: int, cap: int = 10_000) -> Optional[int]:
    """Smallest prime p' <= cap with P(t0, Y) irreducible mod p'.

    Such a prime certifies irreducibility over Q.  None means the
    search was inconclusive, never that the fiber is reducible.
    """
    coeffs = P.at_t(t0)
    n = P.deg_y
    if coeffs[-1] == 0:
        raise DegreeDrop(f"leading coefficient vanishes at t0 = {t0}")
    for q in range(2, cap + 1):
        if not is_prime(q):
            continue
        reduced = [c % q for c in coeffs]
        if reduced[-1] == 0:
            continue
        base = make_field(q, 1)
        f = Poly.from_ints(base, reduced)
        if is_irreducible(f):
            return q
    return None


@dataclass(frozen=True)
class SampleCheck:
    t0: int
    unramified: bool                 # disc_y(P)(t0) != 0
    divisor_ok: dict[int, bool]      # per plan prime
    certificate: Optional[int]       # irreducibility prime, None = inconclusive

    @property
    def hard_pass(self) -> bool:
        return self.unramified and all(self.divisor_ok.values())


@dataclass(frozen=True)
class ProgressionReport:
    progression: Progression
    samples: tuple[SampleCheck, ...]

    @property
    def hard_pass(self) -> bool:
        return all(s.hard_pass for s in self.samples)

    @property
    def certificates_complete(self) -> bool:
        return all(s.certificate is not None for s in self.samples)


def verify_progression(P: BiPoly, prog: Progression, samples: int,
                       certificate_cap: int = 10_000) -> ProgressionReport:
    """Walk the progression and check every promise it makes.

    Per sample t0 = a*m + b: the fiber is unramified over Q, each
    contributing plan sees its target divisor mod its prime, and an
    irreducibility certificate is searched for (its absence is flagged
    inconclusive, not failing: the beta-part guarantee is group
    theory, not something a bounded prime search can refute).
    """
    disc = disc_y(P)
    records = []
    all_plans = prog.plans + prog.beta_plans
    for m in range(samples):
        t0 = prog.modulus * m + prog.residue
        unram = intpoly.evaluate(disc, t0) != 0
        div_ok = {}
        for plan in all_plans:
            div_ok[plan.p] = _divisor_at(P, plan.p, t0 % plan.p) == plan.target
        try:
            cert = hilbert_certificate(P, t0, cap=certificate_cap)
        except DegreeDrop:
            cert = None
        records.append(SampleCheck(t0=t0, unramified=unram,
                                   divisor_ok=div_ok, certificate=cert))
    return ProgressionReport(progression=prog, samples=tuple(records))
