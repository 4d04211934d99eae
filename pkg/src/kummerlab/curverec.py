"""The genus-2 curve behind a Kummer surface, read off from one trope.

The six nodes on a trope lie on its conic; projecting the conic from one
of them identifies it with P^1 and the six nodes with the branch points
of the hyperelliptic double cover.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import lcm

from . import linalg, upoly
from .exactnum import FieldDescriptor
from .groups import GroupProfile, close, group_profile
from .kummer import KummerSurface, Trope
from .numroots import roots_in_field
from .polygeom import MultiPoly, ProjPoint, ProjTransform

BINARY = ("x", "y")

# (order, element-order histogram) -> name
GROUP_NAMES = {
    (5, ((1, 1), (5, 4))): "mu5",
    (6, ((1, 1), (2, 3), (3, 2))): "S3",
    (12, ((1, 1), (2, 7), (3, 2), (6, 2))): "D12",
    (24, ((1, 1), (2, 9), (3, 8), (4, 6))): "S4",
}


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class SixPointSet:
    points: tuple  # six ProjPoints of length 2

    def __post_init__(self):
        if len(self.points) != 6 or len(set(self.points)) != 6:
            raise CurveError("six pairwise distinct points are required")

    @classmethod
    def make(cls, points) -> SixPointSet:
        return cls(tuple(sorted(points, key=lambda p: p.format())))

    @classmethod
    def parse(cls, pairs, desc: FieldDescriptor, bindings=None) -> SixPointSet:
        return cls.make(ProjPoint.parse(p, desc, bindings) for p in pairs)

    @property
    def desc(self) -> FieldDescriptor:
        return self.points[0].desc

    def embed(self, desc: FieldDescriptor) -> SixPointSet:
        return SixPointSet(tuple(p.embed(desc) for p in self.points))

    def format(self) -> str:
        return "{" + ", ".join(p.format() for p in self.points) + "}"


def trope_branch_points(S: KummerSurface, T: Trope, base: ProjPoint) -> SixPointSet:
    """Project the six nodes of a trope from one of them onto a coordinate line."""
    nodes = [S.nodes[k] for k in T.incident_nodes]
    if base not in nodes:
        raise CurveError(f"{base.format()} is not a node on the trope")
    keep = [k for k in range(4) if k != T.record.index]
    b = [base[k] for k in keep]
    # first plane-coordinate line y_k = 0 missing the base
    k0 = next(k for k in range(3) if not b[k].is_zero())
    j, l = [k for k in range(3) if k != k0]
    out = []
    for p in nodes:
        if p == base:
            grad = [T.g.diff(k).evaluate(base.coords) for k in keep]
            if all(c.is_zero() for c in grad):
                raise CurveError("the trope conic is singular at the base node")
            out.append(ProjPoint([grad[l], -grad[j]]))
        else:
            y = [p[k] for k in keep]
            f = y[k0] / b[k0]
            out.append(ProjPoint([y[j] - f * b[j], y[l] - f * b[l]]))
    return SixPointSet.make(out)


def linear_form_at(p: ProjPoint) -> MultiPoly:
    """The binary linear form vanishing at p = [p0:p1], namely p1*x - p0*y."""
    return MultiPoly.linear([p[1], -p[0]], BINARY)


def sextic_from_points(P: SixPointSet) -> MultiPoly:
    f = MultiPoly.constant(P.desc.one(), BINARY)
    for p in P.points:
        f = f * linear_form_at(p)
    return f.normalized()


def binary_form_roots(f: MultiPoly) -> list[ProjPoint]:
    """Roots in P^1 of a binary form over a constant field, with repetition removed."""
    desc = f.desc
    deg = f.degree()
    coeffs = [f.coefficient((k, deg - k)).constant() for k in range(deg + 1)]  # ascending in x
    out = []
    if coeffs[-1].is_zero():
        out.append(ProjPoint([desc.one(), desc.zero()]))
    poly = upoly.strip(coeffs)
    for r in roots_in_field(poly):
        out.append(ProjPoint([desc.from_cyc(r), desc.one()]))
    return out


def _frame(p: ProjPoint, q: ProjPoint, r: ProjPoint):
    """Matrix sending [1:0], [0:1], [1:1] to p, q, r."""
    lam = linalg.nullspace([[p[0], q[0], r[0]], [p[1], q[1], r[1]]], 3)
    if len(lam) != 1:
        raise CurveError("frame points are not distinct")
    a, b, c = lam[0]
    # a p + b q + c r = 0, so (-a/c) p + (-b/c) q = r
    x, y = -a / c, -b / c
    return [[x * p[0], y * q[0]], [x * p[1], y * q[1]]]


def _maps_onto(M: ProjTransform, A: SixPointSet, targets: set) -> bool:
    return all(M.apply(p) in targets for p in A.points)


def _candidate_maps(A: SixPointSet, B: SixPointSet):
    a0, a1, a2 = A.points[:3]
    inv_a = linalg.inverse(_frame(a0, a1, a2))
    for b0, b1, b2 in permutations(B.points, 3):
        yield ProjTransform(linalg.matmul(_frame(b0, b1, b2), inv_a))


def _common(A: SixPointSet, B: SixPointSet) -> tuple[SixPointSet, SixPointSet]:
    if A.desc == B.desc:
        return A, B
    desc = FieldDescriptor(lcm(A.desc.n, B.desc.n), A.desc.transcendental)
    return A.embed(desc), B.embed(desc)


def mobius_equivalent(A: SixPointSet, B: SixPointSet) -> ProjTransform | None:
    """A fractional-linear map carrying A onto B, or None."""
    A, B = _common(A, B)
    targets = set(B.points)
    for M in _candidate_maps(A, B):
        if _maps_onto(M, A, targets):
            return M
    return None


@dataclass(frozen=True)
class ReducedAut:
    profile: GroupProfile
    maps: tuple
    permutations: tuple  # each map as a permutation of the six points
    name: str

    @property
    def order(self) -> int:
        return self.profile.order

    @property
    def curve_aut_order(self) -> int:
        return 2 * self.profile.order


def group_name(profile: GroupProfile) -> str:
    key = (profile.order, tuple(sorted(profile.histogram.items())))
    return GROUP_NAMES.get(key, f"order {profile.order}, unnamed")


def reduced_aut(P: SixPointSet) -> ReducedAut:
    """All fractional-linear self-maps of the six-point set."""
    targets = set(P.points)
    maps = []
    for M in _candidate_maps(P, P):
        if M not in maps and _maps_onto(M, P, targets):
            maps.append(M)
    G = close(maps)
    if G.order != len(maps):
        raise ArithmeticError("self-maps of the point set are not closed under composition")
    profile = group_profile(G)
    idx = {p: k for k, p in enumerate(P.points)}
    perms = tuple(tuple(idx[M.apply(p)] for p in P.points) for M in maps)
    return ReducedAut(profile, tuple(maps), perms, group_name(profile))

