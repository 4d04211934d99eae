"""Heisenberg-invariant Kummer quartics: construction, nodes and tropes.

The quartic is

    a(x0^4+x1^4+x2^4+x3^4) + 2b(x0^2x1^2+x2^2x3^2) + 2c(x0^2x2^2+x1^2x3^2)
        + 2d(x0^2x3^2+x1^2x2^2) + 4e x0x1x2x3

and [a:b:c:d:e] is a Kummer surface when it lies on the Segre cubic
a(a^2+e^2-b^2-c^2-d^2) + 2bcd = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import lcm

from . import elim, linalg, tables, upoly
from .cyclo import Cyc
from .exactnum import FieldDescriptor, FieldElement
from .groups import MatrixGroup, close, orbit
from .numroots import roots_in_field
from .polygeom import (
    Elimination,
    MultiPoly,
    ProjPoint,
    ProjTransform,
    jacobian_at,
    line_through,
    poly_apply_transform,
    poly_sqrt,
    restrict_to_plane,
)

PARAM_NAMES = ("a", "b", "c", "d", "e")


@dataclass(frozen=True)
class KummerParams:
    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    e: FieldElement

    @classmethod
    def make(cls, values) -> KummerParams:
        """Canonical representative: the first nonzero entry scaled to 1."""
        values = list(values)
        lead = next((v for v in values if not v.is_zero()), None)
        if lead is None:
            raise ValueError("[a:b:c:d:e] must not be all zero")
        inv = lead.inverse()
        return cls(*(v * inv for v in values))

    @classmethod
    def parse(cls, texts: dict, desc: FieldDescriptor, bindings=None) -> KummerParams:
        return cls.make([desc.parse(str(texts[k]), bindings) for k in PARAM_NAMES])

    @property
    def desc(self) -> FieldDescriptor:
        return self.a.desc

    def values(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.e)

    def embed(self, desc: FieldDescriptor) -> KummerParams:
        return KummerParams(*(v.embed(desc) for v in self.values()))

    def as_dict(self) -> dict:
        return {k: v.format() for k, v in zip(PARAM_NAMES, self.values())}


def segre_residual(p: KummerParams) -> FieldElement:
    a, b, c, d, e = p.values()
    return a * (a * a + e * e - b * b - c * c - d * d) + 2 * b * c * d


def quartic_form(p: KummerParams) -> MultiPoly:
    desc = p.desc
    x = [MultiPoly.var(desc, f"x{k}") for k in range(4)]
    sq = [v * v for v in x]
    F = (sq[0] * sq[0] + sq[1] * sq[1] + sq[2] * sq[2] + sq[3] * sq[3]).scale(p.a)
    F = F + (sq[0] * sq[1] + sq[2] * sq[3]).scale(p.b * 2)
    F = F + (sq[0] * sq[2] + sq[1] * sq[3]).scale(p.c * 2)
    F = F + (sq[0] * sq[3] + sq[1] * sq[2]).scale(p.d * 2)
    F = F + (x[0] * x[1] * x[2] * x[3]).scale(p.e * 4)
    return F


def heisenberg_group(desc: FieldDescriptor) -> MatrixGroup:
    return close({name: ProjTransform.parse(m, desc) for name, m in tables.HEISENBERG.items()})


@dataclass
class Trope:
    h: MultiPoly
    g: MultiPoly  # conic in 4 variables; g^2 restricts to F on h = 0 (up to `scalar`)
    incident_nodes: tuple  # indices into the node list
    record: Elimination
    status: str = "ok"  # or "extension_required"
    scalar: FieldElement | None = None

    @property
    def plane(self) -> ProjPoint:
        return plane_key(self.h)


@dataclass
class KummerSurface:
    params: KummerParams
    F: MultiPoly
    warnings: list = field(default_factory=list)
    nodes: list | None = None
    tropes: list | None = None

    @property
    def desc(self) -> FieldDescriptor:
        return self.F.desc


def degeneracy(p: KummerParams) -> str | None:
    """Name an evident degeneration: a double quadric, or a quartic through a length-4 H-orbit."""
    F = quartic_form(p)
    if poly_sqrt(F).status != "not_square":
        return "double quadric"
    if not evaluate_on_special_orbits(KummerSurface(p, F)).ok:
        return "vanishes on a length-4 H-orbit"
    return None


def build_surface(p: KummerParams) -> KummerSurface:
    F = quartic_form(p)
    warnings = []
    res = segre_residual(p)
    if not res.is_zero():
        warnings.append(f"Segre residual is {res.format()}, not zero")
    H = heisenberg_group(p.desc)
    for g in H.elements:
        if poly_apply_transform(F, g) != F:
            raise ArithmeticError(f"quartic is not invariant under {g.format()}")
    deg = degeneracy(p)
    if deg:
        warnings.append(f"degenerate: {deg}")
    return KummerSurface(p, F, warnings)


# nodes ----------------------------------------------------------------------


@dataclass(frozen=True)
class NodeVerdict:
    point: ProjPoint
    on_surface: bool
    gradient_zero: bool
    hessian_rank: int

    @property
    def is_node(self) -> bool:
        return self.on_surface and self.gradient_zero and self.hessian_rank == 3


@dataclass
class NodeReport:
    verdicts: list
    single_h_orbit: bool

    @property
    def ok(self) -> bool:
        return len(self.verdicts) == 16 and all(v.is_node for v in self.verdicts) and self.single_h_orbit


def node_verdict(F: MultiPoly, p: ProjPoint) -> NodeVerdict:
    jac = jacobian_at(F, p)
    return NodeVerdict(p, F.evaluate(p.coords).is_zero(), jac.gradient_vanishes, jac.hessian_rank)


def verify_nodes(S: KummerSurface, candidates) -> NodeReport:
    pts = [p.embed(S.desc) if p.desc != S.desc else p for p in candidates]
    verdicts = [node_verdict(S.F, p) for p in pts]
    H = heisenberg_group(S.desc)
    single = bool(pts) and set(orbit(H, pts[0]).points) == set(pts)
    return NodeReport(verdicts, single)


@dataclass
class NodeSearchConfig:
    height: int = 64  # bound for rational roots
    cyclo_height: int = 1  # bound on integral-basis coordinates of cyclotomic roots
    templates: list = field(default_factory=list)  # candidate ProjPoints
    symmetries: list = field(default_factory=list)  # ProjTransforms whose fixed points are tried


@dataclass
class NodeSearch:
    nodes: list
    status: str  # "complete" or "incomplete"
    eliminant_degree: int | None = None
    notes: list = field(default_factory=list)


def _affine_partials(F: MultiPoly) -> list[dict]:
    """dF/dx_k (k = 0, 1, 2) in the chart x3 = 1 as {(e0, e1, e2): Cyc}."""
    out = []
    for k in range(3):
        d = {}
        for e, c in F.diff(k).terms.items():
            key = e[:3]
            d[key] = d[key] + c.constant() if key in d else c.constant()
        out.append({e: c for e, c in d.items() if not c.is_zero()})
    return out


def _tdeg(poly: dict) -> int:
    return max(sum(e) for e in poly)


def _deg_in(poly: dict, k: int) -> int:
    return max(e[k] for e in poly)


def _coeffs_in_x2(poly: dict, v: Cyc, u: Cyc, order: int) -> list[Cyc]:
    deg = _deg_in(poly, 2)
    out = [Cyc.zero(order) for _ in range(deg + 1)]
    for (e0, e1, e2), c in poly.items():
        out[e2] = out[e2] + c * v ** e0 * u ** e1
    return out


def _bivariate_resultant(p: dict, q: dict, order: int) -> dict:
    """Res_{x2}(p, q) as {(i, j): coefficient of x0^i x1^j}, by interpolation."""
    dp, dq = _deg_in(p, 2), _deg_in(q, 2)
    bound = _tdeg(p) * _tdeg(q)
    pts = elim.sample_points(order, bound + 1)
    # rows[a] = the resultant as a polynomial in x1 at x0 = pts[a]
    rows = []
    for v in pts:
        vals = [elim.sylvester_resultant(_coeffs_in_x2(p, v, u, order), _coeffs_in_x2(q, v, u, order), dp, dq)
                for u in pts]
        rows.append(elim.interpolate(pts, vals))
    out = {}
    for j in range(bound + 1):
        col = [r[j] if j < len(r) else Cyc.zero(order) for r in rows]
        poly = elim.interpolate(pts, col)
        for i, c in enumerate(poly):
            if not c.is_zero():
                out[(i, j)] = c
    return out


def _in_x1(poly: dict, v: Cyc, order: int) -> list[Cyc]:
    deg = max(j for _, j in poly)
    out = [Cyc.zero(order) for _ in range(deg + 1)]
    for (i, j), c in poly.items():
        out[j] = out[j] + c * v ** i
    return out


def _univariate_roots(p, order: int, config: NodeSearchConfig) -> list[Cyc]:
    p = upoly.strip(p)
    if len(p) <= 1:
        return []
    if order == 1 or all(c.is_rational() for c in p):
        roots = [Cyc.from_fraction(order, q) for q in elim.rational_roots(p, config.height)]
        if order == 1:
            return roots
    else:
        roots = []
    return sorted(set(roots) | set(_cyclotomic_roots(p, order, config.cyclo_height)), key=lambda c: c.format())


def _cyclotomic_roots(p, order: int, height: int) -> list[Cyc]:
    """Roots whose power-basis coordinates are integers bounded by height."""
    from itertools import product

    deg = len(p[0].c)
    out = []
    for coords in product(range(-height, height + 1), repeat=deg):
        x = Cyc(order, coords)
        if upoly.evaluate(p, x).is_zero():
            out.append(x)
    return out


def _eliminate(F: MultiPoly, config: NodeSearchConfig, notes: list) -> tuple[list, int | None]:
    order = F.desc.n
    f0, f1, f2 = _affine_partials(F)
    if not (f0 and f1 and f2):
        notes.append("an affine partial derivative vanishes identically")
        return [], None
    r1 = _bivariate_resultant(f0, f1, order)
    r2 = _bivariate_resultant(f0, f2, order)
    if not r1 or not r2:
        notes.append("a first resultant vanishes identically")
        return [], None
    d1 = max(j for _, j in r1)
    d2 = max(j for _, j in r2)
    bound = max(sum(e) for e in r1) * max(sum(e) for e in r2)
    pts = elim.sample_points(order, bound + 1)
    vals = [elim.sylvester_resultant(_in_x1(r1, v, order), _in_x1(r2, v, order), d1, d2) for v in pts]
    E = upoly.strip(elim.interpolate(pts, vals))
    if not E:
        notes.append("the final eliminant vanishes identically")
        return [], None
    found = []
    for v in _univariate_roots(E, order, config):
        g1 = upoly.gcd(upoly.strip(_in_x1(r1, v, order)), upoly.strip(_in_x1(r2, v, order)))
        for u in _univariate_roots(g1, order, config):
            cands = [upoly.strip(_coeffs_in_x2(f, v, u, order)) for f in (f0, f1, f2)]
            nonzero = [c for c in cands if c]
            if not nonzero:
                notes.append("a positive-dimensional fibre was skipped")
                continue
            g2 = nonzero[0]
            for c in nonzero[1:]:
                g2 = upoly.gcd(g2, c)
            for w in _univariate_roots(g2, order, config):
                found.append([v, u, w, Cyc.one(order)])
    return found, len(E) - 1


def fixed_point_candidates(g: ProjTransform) -> list[ProjPoint]:
    """Isolated fixed points of g: eigenlines of its matrix over the field."""
    desc = g.desc
    order = desc.n
    rows = [[c.constant() for c in r] for r in g.rows]
    size = len(rows)
    pts = elim.sample_points(order, size + 1)
    vals = []
    for lam in pts:
        vals.append(elim.det_cyc([[x - lam if i == j else x for j, x in enumerate(r)] for i, r in enumerate(rows)]))
    charpoly = elim.interpolate(pts, vals)
    out = []
    for lam in roots_in_field(charpoly):
        shifted = [[desc.from_cyc(x - lam if i == j else x) for j, x in enumerate(r)] for i, r in enumerate(rows)]
        basis = linalg.nullspace(shifted, size)
        if len(basis) == 1:
            out.append(ProjPoint(basis[0]))
    return out


def _complete(F: MultiPoly, H: MatrixGroup, candidates) -> set:
    """Verified nodes among the candidates, closed under H."""
    nodes = set()
    for p in candidates:
        if p not in nodes and node_verdict(F, p).is_node:
            nodes.update(orbit(H, p).points)
    return nodes


def solve_nodes(S: KummerSurface, config: NodeSearchConfig | None = None) -> NodeSearch:
    """Best-effort search for the nodes, completed by H-orbits."""
    config = config or NodeSearchConfig()
    desc = S.desc
    notes = []
    candidates = [p.embed(desc) if p.desc != desc else p for p in config.templates]
    for g in config.symmetries:
        candidates.extend(fixed_point_candidates(g))
    H = heisenberg_group(desc)
    nodes = _complete(S.F, H, candidates)
    degree = None
    if len(nodes) < 16:
        if desc.transcendental is None:
            raw, degree = _eliminate(S.F, config, notes)
            nodes |= _complete(S.F, H, [ProjPoint([desc.from_cyc(c) for c in pt]) for pt in raw])
        else:
            notes.append("symbolic coefficients need candidate templates")
    nodes = sorted(nodes, key=lambda q: q.format())
    return NodeSearch(nodes, "complete" if len(nodes) == 16 else "incomplete", degree, notes)


def family_nodes(desc: FieldDescriptor, bindings=None) -> list[ProjPoint]:
    """The 16 patterned points of the 48-50 family."""
    return [ProjPoint.parse(p, desc, bindings) for p in tables.NODES_48_50]


# tropes -----------------------------------------------------------------------


class TropeError(ValueError):
    pass


def plane_key(h: MultiPoly) -> ProjPoint:
    n = len(h.variables)
    return ProjPoint([h.coefficient(tuple(1 if j == k else 0 for j in range(n))) for k in range(n)])


def _plane_through(points) -> list | None:
    basis = linalg.nullspace([list(p.coords) for p in points], 4)
    if len(basis) != 1:
        return None
    return list(ProjPoint(basis[0]).coords)


def find_tropes(S: KummerSurface) -> list[Trope]:
    """The 16 planes whose intersection with S is a double conic."""
    if not S.nodes or len(S.nodes) != 16:
        raise TropeError("16 verified nodes are needed")
    nodes = S.nodes
    seen = set()
    tropes = []
    for tri in combinations(range(16), 3):
        coeffs = _plane_through([nodes[k] for k in tri])
        if coeffs is None:
            continue
        key = ProjPoint(coeffs)
        if key in seen:
            continue
        seen.add(key)
        h = MultiPoly.linear(list(key.coords))
        incident = tuple(k for k, p in enumerate(nodes) if h.evaluate(p.coords).is_zero())
        if len(incident) != 6:
            continue
        q, rec = restrict_to_plane(S.F, h)
        sq = poly_sqrt(q)
        if sq.status == "not_square":
            continue
        tropes.append(Trope(h, rec.lift(sq.root), incident, rec, sq.status, sq.scalar))
    tropes.sort(key=lambda T: T.plane.format())
    if len(tropes) != 16:
        raise TropeError(f"found {len(tropes)} tropes instead of 16")
    counts = [sum(k in T.incident_nodes for T in tropes) for k in range(16)]
    if any(c != 6 for c in counts):
        raise TropeError(f"node-trope incidence counts {counts} are not all 6")
    return tropes


def incidence_counts(tropes, nnodes: int = 16) -> tuple[list[int], list[int]]:
    per_trope = [len(T.incident_nodes) for T in tropes]
    per_node = [sum(k in T.incident_nodes for T in tropes) for k in range(nnodes)]
    return per_trope, per_node


def family_tropes(desc: FieldDescriptor, bindings=None) -> list[ProjPoint]:
    return [plane_key(MultiPoly.parse(h, desc, bindings=bindings)) for h in tables.TROPES_48_50]


def planes_transitive(H: MatrixGroup, tropes) -> bool:
    """Whether H permutes the trope planes transitively (planes map by h o g^-1)."""
    keys = {T.plane for T in tropes}
    start = tropes[0].h
    reached = {plane_key(poly_apply_transform(start, g.inverse())) for g in H.elements}
    return reached == keys


# special orbits and lines -------------------------------------------------------


@dataclass
class SpecialOrbitReport:
    values: list  # (orbit index, point text, value text)
    vanishing: list  # (orbit index, point text)

    @property
    def ok(self) -> bool:
        return not self.vanishing


def evaluate_on_special_orbits(S: KummerSurface) -> SpecialOrbitReport:
    desc = S.desc.with_order(lcm(S.desc.n, 4))
    F = S.F.embed(desc) if desc != S.desc else S.F
    values, vanishing = [], []
    for k, pts in enumerate(tables.SIGMA_ORBITS, start=1):
        for p in pts:
            pt = ProjPoint.parse(p, desc)
            val = F.evaluate(pt.coords)
            values.append((k, pt.format(), val.format()))
            if val.is_zero():
                vanishing.append((k, pt.format()))
    return SpecialOrbitReport(values, vanishing)


def restriction_to_line(F: MultiPoly, forms) -> list[FieldElement]:
    """Coefficients of F(u p + v q) in u^k v^(4-k) for a basis p, q of the line."""
    rows = [[f.coefficient(tuple(1 if j == k else 0 for j in range(4))) for k in range(4)] for f in forms]
    basis = linalg.nullspace(rows, 4)
    if len(basis) != 2:
        raise ValueError("the two forms do not cut out a line")
    binary = line_through(ProjPoint(basis[0]), ProjPoint(basis[1]), F)
    deg = F.degree()
    return [binary.coefficient((k, deg - k)) for k in range(deg + 1)]


def line_is_transversal(F: MultiPoly, forms) -> bool:
    coeffs = restriction_to_line(F, forms)
    if any(not c.is_constant() for c in coeffs):
        raise ValueError("transversality is decided over a constant field")
    return elim.binary_discriminant_nonzero([c.constant() for c in coeffs])


def transversality_report(S: KummerSurface) -> list[bool]:
    """For each of the 30 fixed lines: does it meet S in 4 distinct points."""
    desc = S.desc.with_order(lcm(S.desc.n, 4))
    F = S.F.embed(desc) if desc != S.desc else S.F
    out = []
    for pair in tables.LINES:
        forms = [MultiPoly.parse(f, desc) for f in pair]
        out.append(line_is_transversal(F, forms))
    return out

