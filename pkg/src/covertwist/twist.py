"""Finite-group model of twisted covers.

The data of a twisting problem: a monodromy group G with normal
geometric part Gbar, a target subgroup H with H*Gbar = G, the fiber
representation nu: G -> S_n, the target representation mu: H -> S_n,
and an automorphism chibar of G/Gbar pinning down the compatibility
between target and constant extensions.  On top of that sit the
embeddings H -> G inducing chibar, their representatives modulo
conjugation by Gbar, the simultaneous-conjugacy condition matching
nu o chi against mu, and the fixed points of the twisted action that
model rational points on the twisted cover.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import (
    BadInput,
    CapExceeded,
    ConstCompFails,
    HypothesisFails,
    ModelInvariantViolated,
    NotASubgroup,
    NotNormal,
)
from .permgroup import (
    GroupHom,
    Perm,
    PermGroup,
    compose_homs,
    conjugated_hom,
    hom_from_images,
    is_normal,
    simultaneous_conjugacy,
    symmetric_group,
)

ISOM_SEARCH_CAP = 10_000_000


class CosetTable:
    """Cosets of a normal subgroup, each named by its least element."""

    __slots__ = ("G", "Gbar", "rep_of", "reps")

    def __init__(self, G: PermGroup, Gbar: PermGroup):
        rep_of: dict[Perm, Perm] = {}
        for g in G.elements:
            if g in rep_of:
                continue
            coset = sorted(g * w for w in Gbar.elements)
            rep = coset[0]
            for x in coset:
                rep_of[x] = rep
        self.G = G
        self.Gbar = Gbar
        self.rep_of = rep_of
        self.reps = tuple(sorted(set(rep_of.values())))

    @property
    def identity_rep(self) -> Perm:
        return self.rep_of[self.G.identity]

    def rep(self, g: Perm) -> Perm:
        return self.rep_of[g]

    def mult(self, a: Perm, b: Perm) -> Perm:
        return self.rep_of[a * b]

    def __len__(self):
        return len(self.reps)


def _canonical_chibar(cosets: CosetTable, chibar: dict[Perm, Perm]):
    """Rewrite a user table onto canonical coset representatives.

    Returns (table, problem): ``problem`` is a diagnostic string when
    the table is not a well-defined automorphism of the quotient.
    """
    table: dict[Perm, Perm] = {}
    for k, v in chibar.items():
        if k not in cosets.rep_of or v not in cosets.rep_of:
            return None, f"chibar entry {k} -> {v} leaves the group"
        rk, rv = cosets.rep(k), cosets.rep(v)
        if rk in table and table[rk] != rv:
            return None, f"chibar is double-valued on the coset of {rk}"
        table[rk] = rv
    if set(table) != set(cosets.reps):
        missing = sorted(set(cosets.reps) - set(table))
        return None, f"chibar undefined on the coset of {missing[0]}"
    if set(table.values()) != set(cosets.reps):
        return None, "chibar is not a bijection of the cosets"
    if table[cosets.identity_rep] != cosets.identity_rep:
        return None, "chibar moves the identity coset"
    for a in cosets.reps:
        for b in cosets.reps:
            if table[cosets.mult(a, b)] != cosets.mult(table[a], table[b]):
                return None, f"chibar is not multiplicative at cosets ({a}, {b})"
    return table, None


def check_const_comp(G: PermGroup, Gbar: PermGroup, H: PermGroup,
                     chibar: dict[Perm, Perm]) -> tuple[bool, str]:
    """Compatibility check: H*Gbar = G and chibar a quotient automorphism.

    The diagnostic names the failing coset or table defect; hard
    structural violations (Gbar not normal, H not a subgroup) raise.
    """
    if not is_normal(Gbar, G):
        raise NotNormal("the geometric part must be normal in the monodromy group")
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H must be a subgroup of G")
    cosets = CosetTable(G, Gbar)
    covered = {cosets.rep(h) for h in H.elements}
    if len(covered) != len(cosets):
        missing = sorted(set(cosets.reps) - covered)
        return False, f"H*Gbar misses the coset of {missing[0]}"
    _, problem = _canonical_chibar(cosets, chibar)
    if problem:
        return False, problem
    return True, "ok"


class TwistProblem:
    """The tuple (G, Gbar, H, nu, mu, chibar) with its invariants enforced."""

    __slots__ = ("n", "G", "Gbar", "H", "nu", "mu", "chibar", "cosets")

    def __init__(self, n: int, G: PermGroup, Gbar: PermGroup, H: PermGroup,
                 nu: GroupHom, mu: GroupHom, chibar: dict[Perm, Perm]):
        if Gbar.degree != G.degree or H.degree != G.degree:
            raise BadInput("G, Gbar, H must share one permutation degree")
        if nu.domain != G or nu.codomain_degree != n:
            raise BadInput("nu must map G into degree n")
        if mu.domain != H or mu.codomain_degree != n:
            raise BadInput("mu must map H into degree n")
        ok, diag = check_const_comp(G, Gbar, H, chibar)
        if not ok:
            raise ConstCompFails(diag)
        self.n = n
        self.G = G
        self.Gbar = Gbar
        self.H = H
        self.nu = nu
        self.mu = mu
        self.cosets = CosetTable(G, Gbar)
        self.chibar, _ = _canonical_chibar(self.cosets, chibar)

    def chibar_of(self, g: Perm) -> Perm:
        return self.chibar[self.cosets.rep(g)]


class SpecializationDatum:
    """A candidate specialization: phiN the target representation of the
    Galois side, psi the representation to test against it.

    The constructor enforces the compatibility invariant (the quotient
    image of psi equals chibar composed with the quotient image of
    phiN) and surjectivity of phiN onto H.
    """

    __slots__ = ("prob", "D", "phiN", "psi")

    def __init__(self, prob: TwistProblem, D: PermGroup,
                 phiN: GroupHom, psi: GroupHom):
        if phiN.domain != D or psi.domain != D:
            raise ModelInvariantViolated("phiN and psi must both be defined on D")
        if phiN.image() != frozenset(prob.H.elements):
            raise ModelInvariantViolated("phiN must surject onto H")
        for img in psi.table.values():
            if img not in prob.G:
                raise ModelInvariantViolated("psi image leaves G")
        for d in D.generators:
            lhs = prob.cosets.rep(psi(d))
            rhs = prob.chibar_of(phiN(d))
            if lhs != rhs:
                raise ModelInvariantViolated(
                    f"quotient images disagree at generator {d}: "
                    f"{lhs} vs {rhs}")
        self.prob = prob
        self.D = D
        self.phiN = phiN
        self.psi = psi


@dataclass(frozen=True)
class ChiClass:
    """One equivalence class of embeddings modulo conjugation by Gbar."""

    gamma: int
    chi: GroupHom
    size: int


def enumerate_isoms(prob: TwistProblem) -> list[GroupHom]:
    """All injective homs H -> G inducing chibar on the quotient.

    Exhaustive generator-image search: a candidate image for generator
    h must have the order of h and land in the coset chibar prescribes;
    surviving assignments are validated as homomorphisms and kept when
    injective.  Output is sorted by generator-image tuples.
    """
    H, G = prob.H, prob.G
    if not H.generators:
        # trivial H: the empty map, valid since chibar fixes the identity coset
        return [hom_from_images(H, [])] if H.order == 1 else []
    candidate_lists = []
    for h in H.generators:
        target_rep = prob.chibar_of(h)
        cands = [g for g in G.elements
                 if g.order() == h.order() and prob.cosets.rep(g) == target_rep]
        candidate_lists.append(cands)
    total = math.prod(len(c) for c in candidate_lists)
    if total > ISOM_SEARCH_CAP:
        raise CapExceeded(f"{total} generator-image candidates exceed the cap")
    found = []
    from .errors import NotAHomomorphism
    for combo in itertools.product(*candidate_lists):
        try:
            hom = hom_from_images(H, list(combo))
        except NotAHomomorphism:
            continue
        if hom.is_injective():
            found.append(hom)
    found.sort(key=lambda f: tuple(p.images for p in f.gen_images()))
    return found


def gamma_representatives(isoms: Sequence[GroupHom],
                          Gbar: PermGroup) -> list[ChiClass]:
    """One representative per class under chi ~ conj(w) o chi, w in Gbar.

    The representative is the least member in the enumeration order of
    the input (which enumerate_isoms sorts canonically).
    """
    def key(hom):
        return tuple(p.images for p in hom.gen_images())

    index = {key(h): i for i, h in enumerate(isoms)}
    assigned = [False] * len(isoms)
    classes = []
    for i, hom in enumerate(isoms):
        if assigned[i]:
            continue
        members = set()
        for w in Gbar.elements:
            k = key(conjugated_hom(w, hom))
            j = index.get(k)
            if j is not None:
                members.add(j)
        for j in members:
            assigned[j] = True
        classes.append(ChiClass(gamma=len(classes), chi=hom, size=len(members)))
    return classes


def check_ii2(prob: TwistProblem, chi: GroupHom) -> Optional[Perm]:
    """Witness sigma in S_n conjugating nu o chi onto mu, if one exists."""
    return simultaneous_conjugacy(compose_homs(prob.nu, chi), prob.mu,
                                  symmetric_group(prob.n))


class CountII2(NamedTuple):
    count: int
    unique: Optional[ChiClass]  # populated exactly when count == 1
    classes: tuple[ChiClass, ...]


def count_ii2(prob: TwistProblem) -> CountII2:
    """How many representative classes admit the conjugacy witness."""
    classes = gamma_representatives(enumerate_isoms(prob), prob.Gbar)
    passing = [c for c in classes if check_ii2(prob, c.chi) is not None]
    unique = passing[0] if len(passing) == 1 else None
    return CountII2(len(passing), unique, tuple(classes))


def _induces_chibar(prob: TwistProblem, chi: GroupHom) -> bool:
    return all(prob.cosets.rep(chi(h)) == prob.chibar_of(h)
               for h in prob.H.generators)


def twisted_fixed_points(prob: TwistProblem, chi: GroupHom,
                         datum: SpecializationDatum) -> frozenset[Perm]:
    """Fixed points in Gbar of the twisted action of the datum.

    These are the w in Gbar with psi(tau) = w (chi o phiN)(tau) w^-1
    for every tau; nonempty exactly when the datum realizes the chi
    class, and then a left coset of the centralizer of chi(H) in Gbar.
    """
    if datum.prob is not prob and datum.prob != prob:
        raise ModelInvariantViolated("datum was built for a different problem")
    if not _induces_chibar(prob, chi):
        raise BadInput("chi does not induce chibar on the quotient")
    pairs = []
    for d in datum.D.generators:
        pairs.append((datum.psi(d), chi(datum.phiN(d))))
    # twisted action stability (the finite model of the stability lemma):
    # psi(tau) x (chi phiN)(tau)^-1 stays in Gbar
    gbar = set(prob.Gbar.elements)
    for lhs, rhs in pairs:
        ri = rhs.inverse()
        for x in prob.Gbar.elements:
            if lhs * x * ri not in gbar:
                raise ModelInvariantViolated(
                    "twisted action does not stabilize Gbar")
    out = []
    for w in prob.Gbar.elements:
        wi = w.inverse()
        if all(lhs == w * rhs * wi for lhs, rhs in pairs):
            out.append(w)
    return frozenset(out)


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def cyclic_chi_a(h_order: int, quotient_order: int, mu_part: int,
                 b: int) -> int:
    """The exponent a = b + k*quotient_order coprime to the group order.

    k is the product of the prime divisors of mu_part that do not
    divide b (empty product 1), which forces gcd(a, mu_part *
    quotient_order) = 1 whenever gcd(b, quotient_order) = 1.
    """
    if h_order < 1 or quotient_order < 1 or mu_part < 1:
        raise BadInput("orders must be positive")
    if (mu_part * quotient_order) % h_order != 0:
        raise BadInput("|H| must divide the group order mu*nu")
    if math.gcd(b, quotient_order) != 1:
        raise BadInput(f"gcd({b}, {quotient_order}) != 1")
    k = 1
    for q in _prime_divisors(mu_part):
        if b % q != 0:
            k *= q
    a = b + k * quotient_order
    assert math.gcd(a, mu_part * quotient_order) == 1
    return a


def cyclic_situation_c(prob: TwistProblem) -> ChiClass:
    """The representative class passing the conjugacy condition when H
    is cyclic and the fiber type of its generator matches mu's type.

    Constructs the power map chi_a with the coprime exponent from
    cyclic_chi_a, locates its class among the representatives, and
    cross-checks that the class indeed passes.
    """
    H = prob.H
    gens_by_order = [x for x in H.elements if x.order() == H.order]
    if not gens_by_order:
        raise HypothesisFails("H is not cyclic")
    omega = min(gens_by_order)
    t_nu = prob.nu(omega).cycle_type()
    t_mu = prob.mu(omega).cycle_type()
    if t_nu != t_mu:
        raise HypothesisFails(
            f"fiber type {t_nu} of the generator differs from the target type {t_mu}")

    nu_q = len(prob.cosets)
    mu_part = prob.G.order // nu_q
    if nu_q == 1:
        b = 1
    else:
        # chibar on the cyclic quotient is a power map; read its exponent
        c = prob.cosets.rep(omega)
        target = prob.chibar[c]
        power = prob.cosets.identity_rep
        b = None
        for e in range(1, nu_q + 1):
            power = prob.cosets.mult(power, c)
            if power == target:
                b = e
                break
        if b is None:
            raise HypothesisFails("quotient is not generated by the image of H")
    a = cyclic_chi_a(H.order, nu_q, mu_part, b)
    chi_a = GroupHom(H, prob.G.degree, {x: x**a for x in H.elements})

    classes = gamma_representatives(enumerate_isoms(prob), prob.Gbar)
    key_a = tuple(p.images for p in chi_a.gen_images())
    home = None
    for cls in classes:
        for w in prob.Gbar.elements:
            if tuple(p.images for p in conjugated_hom(w, cls.chi).gen_images()) == key_a:
                home = cls
                break
        if home:
            break
    if home is None or check_ii2(prob, home.chi) is None:
        raise HypothesisFails("constructed power map does not pass the "
                              "conjugacy condition")
    count = sum(1 for cls in classes if check_ii2(prob, cls.chi) is not None)
    assert count >= 1
    return home
