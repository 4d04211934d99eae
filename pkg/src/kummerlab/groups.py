"""Finite subgroups of PGL_n given by generators.

Elements are ProjTransforms in canonical scaling, so projective equality
is plain equality.  Closure is breadth-first and records for every element
a word in the generators.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from math import lcm

from . import linalg
from .exactnum import FieldElement, fe_sqrt
from .polygeom import MultiPoly, ProjPoint, ProjTransform, poly_apply_transform

DEFAULT_CAP = 10000


class GroupTooLarge(RuntimeError):
    pass


class NotInvariant(ValueError):
    pass


class ExtensionRequired(ValueError):
    def __init__(self, message: str, scalar=None):
        super().__init__(message)
        self.scalar = scalar


@dataclass
class MatrixGroup:
    generators: dict  # name -> ProjTransform
    elements: list
    words: list  # tuple of generator names per element
    index: dict = field(repr=False, default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: ProjTransform) -> bool:
        return g in self.index

    def word_of(self, g: ProjTransform) -> tuple:
        return self.words[self.index[g]]

    @property
    def identity(self) -> ProjTransform:
        return self.elements[0]


def close(generators, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """All products of the generators, by breadth-first search."""
    if not isinstance(generators, dict):
        generators = {f"g{k + 1}": g for k, g in enumerate(generators)}
    if not generators:
        raise ValueError("at least one generator is needed")
    first = next(iter(generators.values()))
    ident = ProjTransform.identity(first.desc, first.size)
    elements, words = [ident], [()]
    index = {ident: 0}
    head = 0
    while head < len(elements):
        x = elements[head]
        for name, g in generators.items():
            y = x * g
            if y not in index:
                if len(elements) >= cap:
                    raise GroupTooLarge(f"group order exceeds cap {cap}")
                index[y] = len(elements)
                elements.append(y)
                words.append(words[head] + (name,))
        head += 1
    return MatrixGroup(dict(generators), elements, words, index)


def element_order(g: ProjTransform, limit: int = 10000) -> int:
    x, k = g, 1
    while not x.is_identity():
        x = x * g
        k += 1
        if k > limit:
            raise GroupTooLarge("element order exceeds limit")
    return k


@dataclass(frozen=True)
class GroupProfile:
    order: int
    exponent: int
    histogram: dict  # element order -> count
    center_order: int


def group_profile(G: MatrixGroup) -> GroupProfile:
    orders = [element_order(g) for g in G.elements]
    hist = dict(sorted(Counter(orders).items()))
    gens = list(G.generators.values())
    center = sum(1 for x in G.elements if all(x * g == g * x for g in gens))
    return GroupProfile(G.order, lcm(*orders), hist, center)


# orbits ---------------------------------------------------------------------


@dataclass(frozen=True)
class Orbit:
    points: tuple
    stabilizer_order: int


def orbit(G: MatrixGroup, p: ProjPoint) -> Orbit:
    seen = {p}
    frontier = [p]
    gens = list(G.generators.values())
    while frontier:
        nxt = []
        for q in frontier:
            for g in gens:
                r = g.apply(q)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    pts = tuple(sorted(seen, key=lambda q: q.format()))
    if G.order % len(pts):
        raise ArithmeticError("orbit length does not divide the group order")
    return Orbit(pts, G.order // len(pts))


def orbits_of(G: MatrixGroup, points) -> list[Orbit]:
    """Partition a G-stable finite set of points into orbits."""
    remaining = set(points)
    out = []
    for p in sorted(points, key=lambda q: q.format()):
        if p in remaining:
            o = orbit(G, p)
            remaining -= set(o.points)
            out.append(o)
    return out


# words and relations ----------------------------------------------------------

_WORD_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z_0-9]*)|(-?\d+)|(.))")


class WordSyntaxError(ValueError):
    pass


class UnknownGenerator(KeyError):
    pass


def _tokens(text: str):
    out = []
    for m in _WORD_TOKEN.finditer(text):
        name, num, ch = m.groups()
        if name:
            out.append(("name", name))
        elif num:
            out.append(("int", int(num)))
        elif ch and not ch.isspace():
            out.append(("op", ch))
    return out


def evaluate_word(text: str, generators: dict) -> ProjTransform:
    """Evaluate a word such as ``(B1*B2)^6`` or ``[B1,B2*B1*B2]^2``.

    Juxtaposition or ``*`` multiplies, ``^k`` takes (possibly negative)
    powers and ``[a,b]`` is the commutator a^-1 b^-1 a b.
    """
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, val=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise WordSyntaxError(f"unexpected token {tok[1]!r} in word {text!r}")
        pos += 1
        return tok

    def product():
        x = power()
        while True:
            tok = peek()
            if tok == ("op", "*"):
                take()
                x = x * power()
            elif tok[0] == "name" or tok in (("op", "("), ("op", "[")):
                x = x * power()
            else:
                return x

    def power():
        x = atom()
        while peek() == ("op", "^"):
            take()
            x = x ** take("int")[1]
        return x

    def atom():
        tok = peek()
        if tok[0] == "name":
            take()
            if tok[1] not in generators:
                raise UnknownGenerator(tok[1])
            return generators[tok[1]]
        if tok == ("op", "("):
            take()
            x = product()
            take("op", ")")
            return x
        if tok == ("op", "["):
            take()
            a = product()
            take("op", ",")
            b = product()
            take("op", "]")
            return a.inverse() * b.inverse() * a * b
        raise WordSyntaxError(f"unexpected token {tok[1]!r} in word {text!r}")

    result = product()
    if pos != len(toks):
        raise WordSyntaxError(f"trailing input in word {text!r}")
    return result


@dataclass(frozen=True)
class RelationCheck:
    word: str
    holds: bool
    value: str


def check_word_relations(generators, relations, modulo: MatrixGroup | None = None) -> list[RelationCheck]:
    """Evaluate each word; test identity, or membership in ``modulo``."""
    if isinstance(generators, MatrixGroup):
        generators = generators.generators
    out = []
    for w in relations:
        x = evaluate_word(w, generators)
        holds = x in modulo if modulo is not None else x.is_identity()
        out.append(RelationCheck(w, holds, x.format()))
    return out


# permutations of polynomial lists -------------------------------------------


class NotAPermutation(ValueError):
    pass


def perm_on_polys(g: ProjTransform, forms: list[MultiPoly]) -> tuple[int, ...]:
    """Permutation k -> j of the list with forms[k] o g^-1 proportional to forms[j].

    forms[k] o g^-1 defines the image g(V(forms[k])) of the hypersurface.
    """
    ginv = g.inverse()
    images = []
    for f in forms:
        h = poly_apply_transform(f, ginv)
        hits = [j for j, f2 in enumerate(forms) if h.proportionality(f2) is not None]
        if len(hits) != 1:
            raise NotAPermutation(f"image of {f.format()} is proportional to {len(hits)} listed forms")
        images.append(hits[0])
    if sorted(images) != list(range(len(forms))):
        raise NotAPermutation("induced map is not a bijection")
    return tuple(images)


def format_cycles(perm) -> str:
    """Cycle notation with 1-based labels; fixed points omitted."""
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        k = perm[start]
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = perm[k]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "()"


# lifts to the double solid ----------------------------------------------------


@dataclass(frozen=True)
class SignCharacter:
    values: dict  # generator name -> +1 or -1

    def on_word(self, word) -> int:
        out = 1
        for name in word:
            out *= self.values[name]
        return out


def character_is_homomorphism(G: MatrixGroup, rho: SignCharacter) -> bool:
    """Check rho on every edge of the Cayley graph of G."""
    vals = [rho.on_word(w) for w in G.words]
    for k, x in enumerate(G.elements):
        for name, g in G.generators.items():
            if vals[G.index[x * g]] != vals[k] * rho.values[name]:
                return False
    return True


@dataclass(frozen=True)
class LiftedElement:
    """(x, w) -> (M x, c w) on the double solid w^2 = F.

    Stored with M in canonical scaling; rescaling M by mu rescales c by
    mu^2 because w has weight 2.
    """

    matrix: ProjTransform
    c: FieldElement

    @classmethod
    def make(cls, rows, c: FieldElement) -> LiftedElement:
        lead = next(x for r in rows for x in r if not x.is_zero())
        inv = lead.inverse()
        return cls(ProjTransform([[x * inv for x in r] for r in rows], _canonical=True), c * inv * inv)

    def __mul__(self, other: LiftedElement) -> LiftedElement:
        return LiftedElement.make(linalg.matmul(self.matrix.rows, other.matrix.rows), self.c * other.c)

    def is_identity(self) -> bool:
        return self.matrix.is_identity() and self.c.is_one()

    def is_deck_involution(self) -> bool:
        return self.matrix.is_identity() and (-self.c).is_one()


@dataclass
class LiftedGroup:
    elements: list
    generators: dict

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains_deck_involution(self) -> bool:
        return any(e.is_deck_involution() for e in self.elements)


def invariance_scalar(F: MultiPoly, g: ProjTransform) -> FieldElement | None:
    """lambda with F o g = lambda F, or None if F is not semi-invariant."""
    return F.proportionality(poly_apply_transform(F, g))


def lift_generator(F: MultiPoly, g: ProjTransform, sign: int, require_exact: bool = True) -> LiftedElement:
    """Lift g to the double solid with w -> sign * sqrt(lambda) w."""
    lam = invariance_scalar(F, g)
    if lam is None:
        raise NotInvariant(f"{g.format()} does not preserve the quartic")
    if require_exact and not lam.is_one():
        raise NotInvariant(f"{g.format()} preserves the quartic only up to the scalar {lam.format()}")
    root = fe_sqrt(lam)
    if root is None:
        raise ExtensionRequired(f"no square root of {lam.format()} in {lam.desc}", lam)
    return LiftedElement(g, root * sign)


def faithful_sign(F: MultiPoly, g: ProjTransform) -> int:
    """The sign of w -> sign*sqrt(lambda)*w whose lift has the projective order of g.

    For odd projective order m exactly one of the two lifts satisfies L^m = 1;
    the other differs by the deck involution.
    """
    m = element_order(g)
    if m % 2 == 0:
        raise ValueError("a canonical lift sign exists only for odd order")
    for sign in (1, -1):
        e = lift_generator(F, g, sign, require_exact=False)
        x = e
        for _ in range(m - 1):
            x = x * e
        if x.is_identity():
            return sign
    raise ArithmeticError("no lift of the expected order")


def lift_group(F: MultiPoly, generators: dict, signs: dict, require_exact: bool = True,
               cap: int = DEFAULT_CAP, abort_on_deck: bool = False) -> LiftedGroup | None:
    """Closure of the lifted generators; None if aborted on meeting w -> -w."""
    lifted = {name: lift_generator(F, g, signs.get(name, 1), require_exact) for name, g in generators.items()}
    first = next(iter(lifted.values()))
    ident = LiftedElement(ProjTransform.identity(first.matrix.desc), first.c.desc.one())
    elements = [ident]
    seen = {ident}
    head = 0
    while head < len(elements):
        x = elements[head]
        for g in lifted.values():
            y = x * g
            if y not in seen:
                if abort_on_deck and y.is_deck_involution():
                    return None
                if len(elements) >= cap:
                    raise GroupTooLarge(f"lifted group exceeds cap {cap}")
                seen.add(y)
                elements.append(y)
        head += 1
    return LiftedGroup(elements, lifted)


def lifts_avoiding_deck(F: MultiPoly, generators: dict, require_exact: bool = False,
                        cap: int = DEFAULT_CAP) -> list[tuple[dict, LiftedGroup]]:
    """All sign choices whose lifted group does not contain w -> -w.

    Such a lift maps isomorphically onto the projective group.  With every
    sign +1, lift each element along its breadth-first word; on each Cayley
    edge x*g = y the lifted product differs from the lift of y by a sign
    eps(x, g).  Changing the generator signs to s multiplies the lift of x by
    the product of s over its word, so the choice s is deck-free exactly when
    eps(x, g) * s(word x) * s(g) = s(word y) on every edge.
    """
    from itertools import product

    G = close(generators, cap)
    base = {name: lift_generator(F, g, 1, require_exact) for name, g in generators.items()}
    lifts = [None] * G.order
    lifts[0] = LiftedElement(G.identity, F.desc.one())
    for k in range(1, G.order):
        word = G.words[k]
        parent = G.index[_word_product(G, word[:-1])]
        lifts[k] = lifts[parent] * base[word[-1]]
    edges = []
    for k, x in enumerate(G.elements):
        for name, g in generators.items():
            y = G.index[x * g]
            prod = lifts[k] * base[name]
            if prod.c == lifts[y].c:
                eps = 1
            elif prod.c == -lifts[y].c:
                eps = -1
            else:
                raise ArithmeticError("lifts of one element differ by more than a sign")
            edges.append((k, name, y, eps))
    names = list(generators)
    out = []
    for combo in product((1, -1), repeat=len(names)):
        signs = dict(zip(names, combo))
        val = [1] * G.order
        for k in range(G.order):
            for name in G.words[k]:
                val[k] *= signs[name]
        if all(eps * val[k] * signs[name] == val[y] for k, name, y, eps in edges):
            out.append((signs, lift_group(F, generators, signs, require_exact, cap)))
    return out


def _word_product(G: MatrixGroup, word) -> ProjTransform:
    x = G.identity
    for name in word:
        x = x * G.generators[name]
    return x


def lift_by_character(H_group: MatrixGroup, F: MultiPoly, rho: SignCharacter) -> LiftedGroup:
    """Lift H to the double solid, each generator acting on w by rho."""
    if not character_is_homomorphism(H_group, rho):
        raise ValueError("the sign assignment does not extend to a homomorphism")
    return lift_group(F, H_group.generators, rho.values, require_exact=True)
