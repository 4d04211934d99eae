"""Incidence geometry of the Heisenberg group H acting on P^3.

Each of the 15 nontrivial elements of H fixes two skew lines pointwise;
ten quadrics are H-semi-invariant; the 30 lines meet in 60 points that form
15 orbits of length 4.  All computations are exact over Q(i).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from . import linalg, tables
from .exactnum import FieldDescriptor, fe_sqrt
from .groups import MatrixGroup, close, orbit, perm_on_polys
from .polygeom import MultiPoly, ProjPoint, ProjTransform, line_through, monomials, poly_apply_transform

QI = FieldDescriptor(4)


class GeometryError(ValueError):
    pass


def heisenberg(desc: FieldDescriptor = QI) -> MatrixGroup:
    return close({name: ProjTransform.parse(m, desc) for name, m in tables.HEISENBERG.items()})


# lines --------------------------------------------------------------------------


def line_key(forms_rows) -> tuple:
    """Canonical key of a line given by the coefficient rows of two forms."""
    red, piv = linalg.rref([list(r) for r in forms_rows])
    if len(piv) != 2:
        raise GeometryError("forms do not define a line")
    return tuple(tuple(r) for r in red)


def form_rows(forms: list[MultiPoly]) -> list[list]:
    return [[f.coefficient(tuple(1 if j == k else 0 for j in range(4))) for k in range(4)] for f in forms]


def forms_from_rows(rows) -> list[MultiPoly]:
    return [MultiPoly.linear(list(r)) for r in rows]


@dataclass(frozen=True)
class LineRecord:
    id: int
    forms: tuple  # two linear MultiPolys
    fixing: ProjTransform  # the nontrivial element of H fixing the line pointwise
    key: tuple

    def points_basis(self) -> list[ProjPoint]:
        return [ProjPoint(v) for v in linalg.nullspace([list(r) for r in self.key], 4)]

    def format(self) -> str:
        return "{" + ", ".join(f.format() for f in self.forms) + " = 0}"


def involution_matrix(g: ProjTransform):
    """A matrix representative of g squaring to the identity."""
    lam = g.square_scalar()
    if lam is None:
        raise GeometryError(f"{g.format()} is not an involution")
    root = fe_sqrt(lam)
    if root is None:
        raise GeometryError(f"no square root of {lam.format()} in {lam.desc}")
    inv = root.inverse()
    return [[x * inv for x in r] for r in g.rows]


def eigen_lines(g: ProjTransform) -> list[tuple]:
    """The two fixed lines of an involution, as rows of defining forms."""
    M = involution_matrix(g)
    desc = g.desc
    out = []
    for ev in (1, -1):
        shifted = [[x - desc.from_int(ev) if i == j else x for j, x in enumerate(r)] for i, r in enumerate(M)]
        space = linalg.nullspace(shifted, 4)
        if len(space) != 2:
            raise GeometryError(f"eigenspace of dimension {len(space)} for {g.format()}")
        out.append(linalg.nullspace(space, 4))
    return out


def fixed_lines(H: MatrixGroup) -> list[LineRecord]:
    """The 30 lines fixed pointwise by the nontrivial elements of H, in table order when possible."""
    records = []
    for g in H.elements[1:]:
        for rows in eigen_lines(g):
            red = line_key(rows)
            records.append((red, g))
    keys = [k for k, _ in records]
    if len(set(keys)) != len(keys):
        raise GeometryError("two elements share a fixed line")
    table = table_lines(H.identity.desc)
    order = {k: n for n, k in enumerate(table)}
    records.sort(key=lambda kg: order.get(kg[0], len(order)))
    return [LineRecord(n + 1, tuple(forms_from_rows(k)), g, k) for n, (k, g) in enumerate(records)]


def table_lines(desc: FieldDescriptor = QI) -> list[tuple]:
    return [line_key(form_rows([MultiPoly.parse(f, desc) for f in pair])) for pair in tables.LINES]


def line_image(g: ProjTransform, key: tuple) -> tuple:
    """Key of g(L): forms f o g^-1."""
    ginv = linalg.inverse(g.rows)
    return line_key(linalg.matmul([list(r) for r in key], ginv))


def line_orbit(H: MatrixGroup, key: tuple) -> set:
    return {line_image(g, key) for g in H.elements}


def lines_are_skew(a: tuple, b: tuple) -> bool:
    return linalg.rank([list(r) for r in a] + [list(r) for r in b]) == 4


# quadrics ------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadricRecord:
    id: int
    form: MultiPoly
    character: dict  # generator name -> +1/-1

    def is_smooth(self) -> bool:
        return not linalg.det(symmetric_matrix(self.form)).is_zero()


def symmetric_matrix(q: MultiPoly):
    desc = q.desc
    half = desc.one() / 2
    m = [[desc.zero()] * 4 for _ in range(4)]
    for e, c in q.terms.items():
        idx = [k for k in range(4) for _ in range(e[k])]
        i, j = idx
        if i == j:
            m[i][i] = c
        else:
            m[i][j] = c * half
            m[j][i] = c * half
    return m


def invariant_quadrics(H: MatrixGroup) -> list[QuadricRecord]:
    """Simultaneous eigenvectors of H on quadratic forms, one per character."""
    desc = H.identity.desc
    monos = monomials(4, 2)
    basis = [MultiPoly(desc, terms={e: desc.one()}) for e in monos]
    names = list(H.generators)
    action = {}
    for name in names:
        g = H.generators[name]
        cols = [poly_apply_transform(b, g) for b in basis]
        action[name] = [[cols[j].coefficient(e) for j in range(len(monos))] for e in monos]
    found = []
    for signs in product((1, -1), repeat=len(names)):
        rows = []
        for name, sgn in zip(names, signs):
            A = action[name]
            rows.extend([[x - desc.from_int(sgn) if i == j else x for j, x in enumerate(r)] for i, r in enumerate(A)])
        space = linalg.nullspace(rows, len(monos))
        if len(space) > 1:
            raise GeometryError(f"eigenspace of dimension {len(space)}")
        if space:
            form = MultiPoly(desc, terms={e: c for e, c in zip(monos, space[0]) if not c.is_zero()}).normalized()
            found.append((form, dict(zip(names, signs))))
    table = [MultiPoly.parse(q, desc) for q in tables.QUADRICS]

    def position(form):
        return next((n for n, q in enumerate(table) if q.proportionality(form) is not None), len(table))

    found.sort(key=lambda fc: position(fc[0]))
    return [QuadricRecord(n + 1, f, c) for n, (f, c) in enumerate(found)]


# incidence ------------------------------------------------------------------------


def line_in_quadric(key: tuple, q: MultiPoly) -> bool:
    p1, p2 = [ProjPoint(v) for v in linalg.nullspace([list(r) for r in key], 4)]
    return line_through(p1, p2, q).is_zero()


def incidence_table(lines: list[LineRecord], quadrics: list[QuadricRecord]) -> list[list[bool]]:
    return [[line_in_quadric(L.key, Q.form) for Q in quadrics] for L in lines]


def table_as_text(table) -> list[str]:
    return ["".join("+" if x else "-" for x in row) for row in table]


@dataclass
class IncidenceSummary:
    row_sums: list
    column_sums: list
    pair_meets: list  # number of common lines for each pair of quadrics


def incidence_summary(table) -> IncidenceSummary:
    rows = [sum(r) for r in table]
    cols = [sum(r[j] for r in table) for j in range(len(table[0]))]
    pairs = [sum(r[a] and r[b] for r in table) for a, b in combinations(range(len(table[0])), 2)]
    return IncidenceSummary(rows, cols, pairs)


# length-4 orbits --------------------------------------------------------------------


def line_intersection(a: tuple, b: tuple) -> ProjPoint | None:
    rows = [list(r) for r in a] + [list(r) for r in b]
    sol = linalg.nullspace(rows, 4)
    if len(sol) == 1:
        return ProjPoint(sol[0])
    if len(sol) > 1:
        raise GeometryError("lines coincide")
    return None


@dataclass(frozen=True)
class OrbitRecord:
    id: int
    points: tuple


@dataclass
class SigmaData:
    orbits: list  # OrbitRecords in table order when possible
    points_per_line: list
    lines_per_point: dict


def sigma_orbits(H: MatrixGroup, lines: list[LineRecord]) -> SigmaData:
    pts = set()
    for a, b in combinations(lines, 2):
        p = line_intersection(a.key, b.key)
        if p is not None:
            pts.add(p)
    orbs = []
    remaining = set(pts)
    for p in sorted(pts, key=lambda q: q.format()):
        if p in remaining:
            o = orbit(H, p).points
            if not set(o) <= pts:
                raise GeometryError("intersection points are not H-stable")
            remaining -= set(o)
            orbs.append(frozenset(o))
    table = table_sigma(H.identity.desc)
    pos = {o: n for n, o in enumerate(table)}
    orbs.sort(key=lambda o: pos.get(o, len(pos)))
    records = [OrbitRecord(n + 1, tuple(sorted(o, key=lambda q: q.format()))) for n, o in enumerate(orbs)]
    per_line = [sum(_on_line(p, L.key) for p in pts) for L in lines]
    per_point = {p: sum(_on_line(p, L.key) for L in lines) for p in pts}
    return SigmaData(records, per_line, per_point)


def table_sigma(desc: FieldDescriptor = QI) -> list[frozenset]:
    return [frozenset(ProjPoint.parse(p, desc) for p in pts) for pts in tables.SIGMA_ORBITS]


def _on_line(p: ProjPoint, key: tuple) -> bool:
    return all(linalg._dot(list(r), list(p.coords)).is_zero() for r in key)


# orbit-length trichotomy ---------------------------------------------------------------


@dataclass(frozen=True)
class OrbitClassification:
    point: ProjPoint
    length: int
    expected: int
    where: str  # "Sigma k", "line k" or "generic"

    @property
    def consistent(self) -> bool:
        return self.length == self.expected


def classify_orbit_length(H: MatrixGroup, p: ProjPoint, lines: list[LineRecord],
                          sigma: list[OrbitRecord]) -> OrbitClassification:
    length = len(orbit(H, p).points)
    for rec in sigma:
        if p in rec.points:
            return OrbitClassification(p, length, 4, f"Sigma {rec.id}")
    for L in lines:
        if _on_line(p, L.key):
            return OrbitClassification(p, length, 8, f"line {L.id}")
    return OrbitClassification(p, length, 16, "generic")


def random_points(lines: list[LineRecord], sigma: list[OrbitRecord], count: int, seed: int = 0,
                  desc: FieldDescriptor = QI) -> list[ProjPoint]:
    """A deterministic mix of generic points, points on lines and Sigma points."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        kind = k % 3
        if kind == 0:
            while True:
                v = [desc.parse(f"{rng.randint(-9, 9)}+{rng.randint(-9, 9)}*i") for _ in range(4)]
                if any(not x.is_zero() for x in v):
                    break
            out.append(ProjPoint(v))
        elif kind == 1:
            L = rng.choice(lines)
            p1, p2 = L.points_basis()
            a, b = rng.randint(1, 9), rng.randint(-9, 9)
            out.append(ProjPoint([x * a + y * b for x, y in zip(p1.coords, p2.coords)]))
        else:
            out.append(rng.choice(rng.choice(sigma).points))
    return out


# normalizer action --------------------------------------------------------------------


def permutes_lines(g: ProjTransform, lines: list[LineRecord]) -> bool:
    keys = {L.key for L in lines}
    return {line_image(g, k) for k in keys} == keys


def permutes_quadrics(g: ProjTransform, quadrics: list[QuadricRecord]) -> bool:
    try:
        perm_on_polys(g, [Q.form for Q in quadrics])
    except ValueError:
        return False
    return True
