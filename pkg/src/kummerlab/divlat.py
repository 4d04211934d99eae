"""Sheets over the tropes, their intersection pairing and class-group ranks.

Over the double solid X = {w^2 = F}, a trope h = 0 with F = g^2 mod (h)
pulls back to two sheets {h = 0, w = +g} and {h = 0, w = -g}.  The pairing
between two sheets over different tropes is 1 when they share a curve over
the common line and 0 otherwise; over the same trope it is -1 for equal
sheets and 2 for the two halves.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .groups import ExtensionRequired, LiftedElement, LiftedGroup
from .kummer import Trope, plane_key
from .polygeom import Elimination, MultiPoly, ProjPoint, line_through, poly_apply_transform


class SheetError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneSheet:
    index: int  # 1-based trope label
    sign: int  # the sheet is {h = 0, w = sign * g}
    h: MultiPoly
    g: MultiPoly
    record: Elimination

    @property
    def label(self) -> str:
        return f"P{self.index}{'+' if self.sign > 0 else '-'}"


def split_tropes(tropes: list[Trope], order: list[ProjPoint] | None = None) -> list[PlaneSheet]:
    """Both sheets over every trope; the '+' sheet uses the normalized root g.

    ``order`` optionally fixes the labeling: order[k] is the plane of trope k+1.
    """
    for T in tropes:
        if T.status != "ok":
            raise ExtensionRequired(
                f"trope {T.h.format()} needs a square root of {T.scalar.format()} outside {T.scalar.desc}",
                T.scalar,
            )
    if order is not None:
        by_plane = {T.plane: T for T in tropes}
        missing = [p.format() for p in order if p not in by_plane]
        if missing or len(order) != len(tropes):
            raise SheetError(f"labeling planes do not match the tropes: {missing}")
        tropes = [by_plane[p] for p in order]
    sheets = []
    for k, T in enumerate(tropes, start=1):
        for sign in (1, -1):
            sheets.append(PlaneSheet(k, sign, T.h, T.g, T.record))
    return sheets


def _line_basis(h1: MultiPoly, h2: MultiPoly) -> tuple[ProjPoint, ProjPoint]:
    rows = [list(plane_key(h1).coords), list(plane_key(h2).coords)]
    basis = linalg.nullspace(rows, 4)
    if len(basis) != 2:
        raise SheetError("the two planes coincide")
    return ProjPoint(basis[0]), ProjPoint(basis[1])


def relative_sign(s1: PlaneSheet, s2: PlaneSheet) -> int:
    """sigma with g1 = sigma * g2 on the common line of two distinct tropes."""
    p, q = _line_basis(s1.h, s2.h)
    r1 = line_through(p, q, s1.g)
    r2 = line_through(p, q, s2.g)
    if r1.is_zero() or r2.is_zero():
        raise SheetError("a trope conic vanishes on the common line")
    if r1 == r2:
        return 1
    if r1 == -r2:
        return -1
    raise SheetError("trope conics disagree on the common line beyond sign")


def pair_from_sign(s1: PlaneSheet, s2: PlaneSheet, sigma: int | None) -> int:
    if s1.index == s2.index:
        return -1 if s1.sign == s2.sign else 2
    # w = e1 g1 and w = e2 g2 share the line exactly when e1 g1 = e2 g2 there
    return 1 if s1.sign * sigma == s2.sign else 0


def sheet_pair(s1: PlaneSheet, s2: PlaneSheet, F: MultiPoly | None = None) -> int:
    sigma = None if s1.index == s2.index else relative_sign(s1, s2)
    return pair_from_sign(s1, s2, sigma)


@dataclass
class GramMatrix:
    labels: list
    rows: list

    def rank(self) -> int:
        return linalg.int_rank(self.rows)

    def is_symmetric(self) -> bool:
        n = len(self.rows)
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(n))

    def submatrix(self, idx) -> GramMatrix:
        return GramMatrix([self.labels[i] for i in idx], [[self.rows[i][j] for j in idx] for i in idx])

    def to_json(self) -> dict:
        return {"labels": self.labels, "rows": self.rows}

    def to_markdown(self) -> str:
        head = "| | " + " | ".join(self.labels) + " |"
        sep = "|" + "---|" * (len(self.labels) + 1)
        body = ["| " + lab + " | " + " | ".join(str(x) for x in row) + " |" for lab, row in zip(self.labels, self.rows)]
        return "\n".join([head, sep, *body])


def gram_rank(M) -> int:
    rows = M.rows if isinstance(M, GramMatrix) else M
    return linalg.int_rank(rows)


@dataclass
class SheetLattice:
    """The sheets of one surface together with the cached pairwise signs."""

    sheets: list
    signs: dict = field(default_factory=dict)  # (i, j) trope labels -> sigma

    def sigma(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key not in self.signs:
            a = next(s for s in self.sheets if s.index == key[0])
            b = next(s for s in self.sheets if s.index == key[1])
            self.signs[key] = relative_sign(a, b)
        return self.signs[key]

    def pair(self, s1: PlaneSheet, s2: PlaneSheet) -> int:
        sigma = None if s1.index == s2.index else self.sigma(s1.index, s2.index)
        return pair_from_sign(s1, s2, sigma)

    def gram(self, subset=None) -> GramMatrix:
        sel = self.sheets if subset is None else subset
        return GramMatrix([s.label for s in sel], [[self.pair(a, b) for b in sel] for a in sel])

    def plus_sheets(self) -> list:
        return [s for s in self.sheets if s.sign > 0]


def gram(sheets, lattice: SheetLattice | None = None) -> GramMatrix:
    lattice = lattice or SheetLattice(list(sheets))
    return lattice.gram(list(sheets))


def block_sums(M: GramMatrix, sheets) -> list[int]:
    """Sum of each 2x2 block pairing the two sheets of trope i with those of trope j."""
    pos = {(s.index, s.sign): k for k, s in enumerate(sheets)}
    labels = sorted({s.index for s in sheets})
    out = []
    for i in labels:
        for j in labels:
            out.append(sum(M.rows[pos[(i, a)]][pos[(j, b)]] for a in (1, -1) for b in (1, -1)))
    return out


# sign alignment with a reference matrix -------------------------------------------


@dataclass(frozen=True)
class Alignment:
    flips: tuple  # 1-based trope labels whose sheets are exchanged
    matches: bool


def align_signs(computed: list[list[int]], reference: list[list[int]]) -> Alignment:
    """Find trope flips turning the computed '+' block into the reference.

    Flipping trope k toggles the off-diagonal entries (k, j) between 0 and 1,
    so row 1 decides every flip once trope 1 is fixed; the complementary set
    is the only other candidate.
    """
    n = len(reference)
    base = [j for j in range(1, n) if computed[0][j] != reference[0][j]]
    candidates = [set(base), set(range(n)) - set(base)]
    best = None
    for flips in candidates:
        flipped = [[_flip_entry(computed[i][j], (i in flips) != (j in flips), i == j) for j in range(n)]
                   for i in range(n)]
        if flipped == reference:
            cand = tuple(sorted(k + 1 for k in flips))
            if best is None or (len(cand), cand) < (len(best), best):
                best = cand
    if best is None:
        return Alignment(tuple(sorted(k + 1 for k in base)), False)
    return Alignment(best, True)


def _flip_entry(x: int, toggled: bool, diagonal: bool) -> int:
    if diagonal or not toggled:
        return x
    return 1 - x


# group actions on sheets ----------------------------------------------------------


def image_sheet(e: LiftedElement, s: PlaneSheet, lattice: SheetLattice) -> PlaneSheet:
    """The sheet {h o M^-1 = 0, w = sign * c * g o M^-1}, located in the list."""
    # the raw inverse: rescaling it would rescale g o M^-1 by a square
    Minv = linalg.inverse(e.matrix.rows)
    target_plane = plane_key(poly_apply_transform(s.h, Minv))
    target = next((t for t in lattice.sheets if t.sign > 0 and plane_key(t.h) == target_plane), None)
    if target is None:
        raise SheetError("the group does not permute the tropes")
    moved = poly_apply_transform(s.g, Minv).scale(e.c)
    r = target.record.restrict(moved)
    r_target = target.record.restrict(target.g)
    if r == r_target:
        sign = s.sign
    elif r == -r_target:
        sign = -s.sign
    else:
        raise SheetError("the group does not permute the sheets")
    return next(t for t in lattice.sheets if t.index == target.index and t.sign == sign)


def sheet_permutations(G: LiftedGroup, lattice: SheetLattice) -> dict:
    """For every lifted generator the induced permutation of sheet positions."""
    pos = {(s.index, s.sign): k for k, s in enumerate(lattice.sheets)}
    out = {}
    for name, e in G.generators.items():
        perm = []
        for s in lattice.sheets:
            t = image_sheet(e, s, lattice)
            perm.append(pos[(t.index, t.sign)])
        if sorted(perm) != list(range(len(perm))):
            raise SheetError(f"{name} does not permute the sheets")
        out[name] = tuple(perm)
    return out


def sheet_orbits(perms: dict, n: int) -> list[list[int]]:
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        k = 0
        while k < len(orb):
            x = orb[k]
            for p in perms.values():
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
            k += 1
        out.append(sorted(orb))
    return out


def invariant_class_rank(lattice: SheetLattice, G: LiftedGroup, full: GramMatrix | None = None) -> int:
    """Rank of the Gram matrix of orbit sums of sheets under the lifted group."""
    full = full or lattice.gram()
    perms = sheet_permutations(G, lattice)
    orbs = sheet_orbits(perms, len(lattice.sheets))
    return gram_rank(_orbit_sum_gram(full, orbs))


def _orbit_sum_gram(full: GramMatrix, orbs) -> list[list[int]]:
    return [[sum(full.rows[a][b] for a in o1 for b in o2) for o2 in orbs] for o1 in orbs]


@dataclass
class CriterionReport:
    orbit_sizes: list
    swapped: bool  # a group element exchanges the two sheets of some trope
    orbit_ranks: list  # Gram rank of each orbit
    invariant_rank: int
    verdict: str  # "Z" or "Z^2"
    reason: str

    def as_dict(self) -> dict:
        return {
            "orbit_sizes": self.orbit_sizes,
            "swapped": self.swapped,
            "orbit_ranks": self.orbit_ranks,
            "invariant_rank": self.invariant_rank,
            "verdict": self.verdict,
            "reason": self.reason,
        }


def criterion_report(lattice: SheetLattice, G: LiftedGroup, full: GramMatrix | None = None) -> CriterionReport:
    full = full or lattice.gram()
    perms = sheet_permutations(G, lattice)
    orbs = sheet_orbits(perms, len(lattice.sheets))
    sheets = lattice.sheets
    swapped = any(
        any(sheets[a].index == sheets[b].index and sheets[a].sign != sheets[b].sign for a in o for b in o)
        for o in orbs
    )
    orbit_ranks = [gram_rank(full.submatrix(o)) for o in orbs]
    inv = gram_rank(_orbit_sum_gram(full, orbs))
    if swapped:
        reason = "a group element exchanges the two sheets over a trope"
    elif any(r == full.rank() for r in orbit_ranks):
        reason = "one sheet orbit alone has full rank"
    else:
        reason = f"orbit sums span rank {inv}"
    verdict = "Z" if inv == 1 else ("Z^2" if inv == 2 else f"Z^{inv}")
    return CriterionReport([len(o) for o in orbs], swapped, orbit_ranks, inv, verdict, reason)


def sheets_match_reference(lattice: SheetLattice, reference: list[MultiPoly]) -> list[int | None]:
    """For each '+' sheet, +1/-1 if the reference conic equals +-g on the plane, else None."""
    out = []
    for s, ref in zip(lattice.plus_sheets(), reference):
        r, mine = s.record.restrict(ref), s.record.restrict(s.g)
        out.append(1 if r == mine else (-1 if r == -mine else None))
    return out

