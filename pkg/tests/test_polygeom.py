from __future__ import annotations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from kummerlab import tables
from kummerlab.exactnum import FieldDescriptor
from kummerlab.kummer import KummerParams, quartic_form
from kummerlab.polygeom import (
    MultiPoly,
    ProjPoint,
    ProjTransform,
    jacobian_at,
    poly_apply_transform,
    poly_sqrt,
    restrict_to_plane,
)

Q = FieldDescriptor(1)
QI = FieldDescriptor(4)
QT = FieldDescriptor(1, "t")


def family_F(desc, t_text):
    t = desc.parse(t_text)
    p = KummerParams.parse({"a": "2", "b": "-t^2-1", "c": "-t^2-1", "d": "-t^2-1", "e": "t^3+3*t"}, desc, {"t": t})
    return quartic_form(p)


def test_transform_identity_and_invariance():
    F = family_F(QT, "t")
    assert poly_apply_transform(F, ProjTransform.identity(QT)) == F
    A1 = ProjTransform.parse(tables.MATRICES["A1"], QT)
    assert poly_apply_transform(F, A1) == F


def _sympy_pullback(form: str, matrix) -> sympy.Expr:
    xs = sympy.symbols("x0:4")
    I = sympy.I
    M = sympy.Matrix([[sympy.sympify(str(c).replace("^", "**"), locals={"i": I}) for c in row] for row in matrix])
    image = M * sympy.Matrix(xs)
    expr = sympy.sympify(form.replace("^", "**"), locals={f"x{k}": xs[k] for k in range(4)})
    return sympy.expand(expr.subs({xs[k]: image[k] for k in range(4)}, simultaneous=True))


def test_quadric_pullback_under_b2_matches_independent_expansion():
    Q1 = MultiPoly.parse(tables.QUADRICS[0], QI)
    raw = [[QI.parse(str(x)) for x in r] for r in tables.MATRICES["B2"]]
    mine = poly_apply_transform(Q1, raw)
    # independent oracle: sympy substitution of the raw matrix
    ref = MultiPoly.parse(str(_sympy_pullback(tables.QUADRICS[0], tables.MATRICES["B2"])).replace("**", "^")
                          .replace("I", "i"), QI)
    assert mine == ref
    quads = [MultiPoly.parse(q, QI) for q in tables.QUADRICS]
    hits = [k + 1 for k, q in enumerate(quads) if q.proportionality(mine) is not None]
    assert hits == [6]


def test_restrict_to_trope_gives_scaled_square_of_conic():
    F = family_F(QT, "t")
    h = MultiPoly.parse(tables.TROPES_48_50[0], QT)
    q, rec = restrict_to_plane(F, h)
    C = rec.restrict(MultiPoly.parse(tables.CONIC_1, QT))
    assert q == (C * C).scale(QT.parse("1-t^2"))


def test_restrict_trivial_and_generic():
    x0, x1 = MultiPoly.var(Q, "x0"), MultiPoly.var(Q, "x1")
    q, rec = restrict_to_plane(x0 * x0 + x1 * x1, x0)
    assert rec.name == "x0" and q == x1 * x1
    F = family_F(Q, "2")
    q, _ = restrict_to_plane(F, MultiPoly.parse("x0+2*x1+3*x2+5*x3", Q))
    assert poly_sqrt(q).status == "not_square"


def test_sqrt_examples():
    x0, x1 = MultiPoly.var(Q, "x0"), MultiPoly.var(Q, "x1")
    r = poly_sqrt((x0 + x1) ** 2)
    assert r.ok and r.root in (x0 + x1, -(x0 + x1))
    assert poly_sqrt(x0 ** 4 + x1 ** 4).status == "not_square"
    r = poly_sqrt((x0 + x1) ** 2 * 2)
    assert r.status == "extension_required" and r.scalar == Q.from_int(2)


def test_jacobian_examples():
    F = family_F(Q, "2")
    jac = jacobian_at(F, ProjPoint.parse(["1", "1", "1", "2"], Q))
    assert jac.gradient_vanishes and jac.hessian_rank == 3
    x0 = MultiPoly.var(Q, "x0")
    jac = jacobian_at(x0 * x0, ProjPoint.parse(["0", "0", "0", "1"], Q))
    assert jac.gradient_vanishes and jac.hessian_rank == 1
    # a smooth point of S: F(1, 0, 0, x3) = x3^4 + 2 x3^2 + 1 with parameters a=1 after scaling
    assert not jacobian_at(F, ProjPoint.parse(["1", "0", "0", "0"], Q)).gradient_vanishes


def test_projective_canonical_forms():
    p = ProjPoint.parse(["0", "2", "4", "-2"], Q)
    assert p.format() == "[0:1:2:-1]"
    with pytest.raises(ValueError):
        ProjPoint.parse(["0", "0", "0", "0"], Q)
    g = ProjTransform.parse([["2", "0"], ["0", "4"]], Q)
    assert g == ProjTransform.parse([["1", "0"], ["0", "2"]], Q)
    with pytest.raises(ValueError):
        ProjTransform.parse([["1", "1"], ["1", "1"]], Q)


ints = st.integers(-3, 3)


@st.composite
def transforms(draw):
    """L * U with L unitriangular and U upper triangular with nonzero diagonal."""
    low = draw(st.lists(ints, min_size=6, max_size=6))
    up = draw(st.lists(ints, min_size=6, max_size=6))
    diag = draw(st.lists(st.sampled_from([-2, -1, 1, 2, 3]), min_size=4, max_size=4))
    L = [[Q.one() if i == j else Q.zero() for j in range(4)] for i in range(4)]
    U = [[Q.from_int(diag[i]) if i == j else Q.zero() for j in range(4)] for i in range(4)]
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    for (i, j), a, b in zip(pairs, low, up):
        L[j][i] = Q.from_int(a)
        U[i][j] = Q.from_int(b)
    return ProjTransform([[sum((L[i][k] * U[k][j] for k in range(4)), Q.zero()) for j in range(4)]
                          for i in range(4)])


@st.composite
def quadrics(draw):
    from kummerlab.polygeom import monomials

    terms = {e: Q.from_int(draw(ints)) for e in monomials(4, 2)}
    return MultiPoly(Q, terms={e: c for e, c in terms.items() if not c.is_zero()})


@given(quadrics(), transforms(), transforms())
def test_transform_is_right_action(F, g, h):
    # the raw product: a normalized ProjTransform would rescale F o (gh) by a constant
    gh = [[sum((g.rows[i][k] * h.rows[k][j] for k in range(4)), Q.zero()) for j in range(4)] for i in range(4)]
    assert poly_apply_transform(F, gh) == poly_apply_transform(poly_apply_transform(F, g), h)


@given(quadrics())
def test_sqrt_of_square(g):
    r = poly_sqrt(g * g)
    assert r.ok and r.root in (g, -g)
    assert poly_sqrt(g * g).root == r.root


@given(quadrics(), st.lists(ints, min_size=4, max_size=4).filter(any))
def test_restriction_lift_round_trip(F, coeffs):
    h = MultiPoly.linear([Q.from_int(c) for c in coeffs])
    q, rec = restrict_to_plane(F, h)
    # F - lift(q) vanishes on h = 0: its restriction is zero
    assert rec.restrict(F - rec.lift(q)).is_zero()
