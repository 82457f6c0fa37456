"""Parsers for the CLI's text inputs.

Polynomial expressions in T and Y (integer literals, + - * ^ and
parentheses; implicit multiplication is rejected), permutations in
cycle notation, and the keyword-line files describing twisting
problems, specialization data and progression plans.
"""

from __future__ import annotations

import re
from typing import Optional

from .errors import BadInput, PolySyntaxError, UnknownVariable
from .permgroup import GroupHom, Perm, PermGroup, generate, hom_from_images
from .polyfactor import BiPoly, DegreeDivisor
from .twist import SpecializationDatum, TwistProblem

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()]))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == m.start():
            if src[pos:].strip():
                bad = len(src) - len(src[pos:].lstrip())
                raise PolySyntaxError(f"unexpected character {src[bad]!r}", bad)
            break
        num, name, op = m.groups()
        offset = m.end() - len((num or name or op))
        if num is not None:
            tokens.append(("num", int(num), offset))
        elif name is not None:
            tokens.append(("name", name, offset))
        else:
            tokens.append(("op", op, offset))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _PolyParser:
    """Recursive descent over {(i, j): coeff} term dictionaries."""

    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> dict[tuple[int, int], int]:
        terms = self.expr()
        kind, _, offset = self.peek()
        if kind != "end":
            raise PolySyntaxError("trailing input", offset)
        return terms

    def expr(self):
        acc = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                if val == "-":
                    rhs = {k: -c for k, c in rhs.items()}
                acc = _add(acc, rhs)
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val, offset = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = _mul(acc, self.factor())
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                raise PolySyntaxError("missing operator (implicit "
                                      "multiplication is not allowed)", offset)
            else:
                return acc

    def factor(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return {k: -c for k, c in self.factor().items()}
        return self.base()

    def base(self):
        atom = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            ekind, exp, eoffset = self.take()
            if ekind != "num":
                raise PolySyntaxError("exponent must be a nonnegative integer",
                                      eoffset)
            out = {(0, 0): 1}
            for _ in range(exp):
                out = _mul(out, atom)
            return out
        return atom

    def atom(self):
        kind, val, offset = self.take()
        if kind == "num":
            return {(0, 0): val}
        if kind == "name":
            if val == "T":
                return {(1, 0): 1}
            if val == "Y":
                return {(0, 1): 1}
            raise UnknownVariable(val, offset)
        if kind == "op" and val == "(":
            inner = self.expr()
            ckind, cval, coffset = self.take()
            if ckind != "op" or cval != ")":
                raise PolySyntaxError("expected ')'", coffset)
            return inner
        raise PolySyntaxError("expected a number, T, Y or '('", offset)


def _add(a, b):
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def _mul(a, b):
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def parse_poly(src: str) -> BiPoly:
    """Parse an integer polynomial in T and Y into a cover."""
    terms = _PolyParser(src).parse()
    if not terms:
        raise BadInput("the zero polynomial is not a cover")
    return BiPoly.from_terms(terms)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> Perm:
    """Cycle notation, 1-based: '(1 2 3)(4 5)'; '()' is the identity."""
    text = text.strip()
    if not text:
        raise BadInput("empty permutation")
    consumed = "".join(_CYCLE.findall(text))
    stripped = re.sub(r"[\s]", "", text)
    rebuilt = re.sub(r"[\s]", "", "".join(f"({c})" for c in _CYCLE.findall(text)))
    if stripped != rebuilt:
        raise BadInput(f"malformed permutation {text!r}")
    cycles = []
    for body in _CYCLE.findall(text):
        pts = body.split()
        if not pts:
            continue
        try:
            cycles.append(tuple(int(x) for x in pts))
        except ValueError:
            raise BadInput(f"bad cycle point in {text!r}") from None
    return Perm.from_cycles(cycles, degree)


def parse_perm_list(text: str, degree: int) -> list[Perm]:
    return [parse_perm(part, degree) for part in text.split(",") if part.strip()]


def parse_perm_map(text: str, src_degree: int,
                   dst_degree: int) -> list[tuple[Perm, Perm]]:
    """Semicolon-separated 'perm -> perm' pairs."""
    pairs = []
    for part in text.split(";"):
        if not part.strip():
            continue
        if "->" not in part:
            raise BadInput(f"expected 'perm -> perm' in {part!r}")
        lhs, rhs = part.split("->", 1)
        pairs.append((parse_perm(lhs, src_degree), parse_perm(rhs, dst_degree)))
    return pairs


def _keyword_lines(text: str) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, payload = line.partition(" ")
        if key in out:
            raise BadInput(f"duplicate key {key!r} on line {lineno}")
        out[key] = payload.strip()
    return out


def _group_from(payload: str, degree: int) -> PermGroup:
    gens = [g for g in parse_perm_list(payload, degree) if not g.is_identity]
    return generate(gens, degree=degree)


def _hom_from(payload: str, domain: PermGroup, dst_degree: int,
              what: str) -> GroupHom:
    pairs = parse_perm_map(payload, domain.degree, dst_degree)
    by_key = dict(pairs)
    if len(by_key) != len(pairs):
        raise BadInput(f"{what}: repeated generator on the left side")
    images = []
    for g in domain.generators:
        if g not in by_key:
            raise BadInput(f"{what}: no image given for generator {g}")
        images.append(by_key.pop(g))
    if by_key:
        extra = next(iter(by_key))
        raise BadInput(f"{what}: {extra} is not a generator of the domain")
    return hom_from_images(domain, images)


def parse_twist_problem(text: str) -> TwistProblem:
    """Problem file: keyword lines (# comments allowed).

    degree  <permutation degree of G, Gbar, H>
    ambient <fiber degree n>
    G       <generators, comma separated cycle notation>
    Gbar    <generators>
    H       <generators>
    nu      <gen -> image; ...>   images in degree n
    mu      <gen -> image; ...>   images in degree n
    chibar  <element -> element; ...>  on coset representatives
    """
    kv = _keyword_lines(text)
    missing = {"degree", "ambient", "G", "Gbar", "H", "nu", "mu",
               "chibar"} - set(kv)
    if missing:
        raise BadInput(f"problem file lacks keys: {sorted(missing)}")
    degree = int(kv["degree"])
    ambient = int(kv["ambient"])
    G = _group_from(kv["G"], degree)
    Gbar = _group_from(kv["Gbar"], degree)
    H = _group_from(kv["H"], degree)
    nu = _hom_from(kv["nu"], G, ambient, "nu")
    mu = _hom_from(kv["mu"], H, ambient, "mu")
    chibar = dict(parse_perm_map(kv["chibar"], degree, degree))
    return TwistProblem(ambient, G, Gbar, H, nu, mu, chibar)


def parse_datum(text: str, prob: TwistProblem) -> SpecializationDatum:
    """Datum file: degree <D's degree>, D <gens>, phiN <map>, psi <map>."""
    kv = _keyword_lines(text)
    missing = {"degree", "D", "phiN", "psi"} - set(kv)
    if missing:
        raise BadInput(f"datum file lacks keys: {sorted(missing)}")
    degree = int(kv["degree"])
    D = _group_from(kv["D"], degree)
    phiN = _hom_from(kv["phiN"], D, prob.G.degree, "phiN")
    psi = _hom_from(kv["psi"], D, prob.G.degree, "psi")
    return SpecializationDatum(prob, D, phiN, psi)


class PlanSpec:
    """Parsed progression plan file."""

    def __init__(self, floor: Optional[int], beta_types: list[DegreeDivisor],
                 plans: list[tuple[int, DegreeDivisor]]):
        self.floor = floor
        self.beta_types = beta_types
        self.plans = plans


def parse_plan(text: str) -> PlanSpec:
    """Plan file lines: 'floor N', 'beta-class DIV', 'plan P DIV'."""
    floor = None
    beta_types: list[DegreeDivisor] = []
    plans: list[tuple[int, DegreeDivisor]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, payload = line.partition(" ")
        payload = payload.strip()
        if key == "floor":
            floor = int(payload)
        elif key == "beta-class":
            beta_types.append(DegreeDivisor.parse(payload))
        elif key == "plan":
            ptext, _, dtext = payload.partition(" ")
            plans.append((int(ptext), DegreeDivisor.parse(dtext)))
        else:
            raise BadInput(f"unknown plan directive {key!r} on line {lineno}")
    if beta_types and floor is None:
        raise BadInput("beta-class lines need a floor line")
    return PlanSpec(floor, beta_types, plans)
