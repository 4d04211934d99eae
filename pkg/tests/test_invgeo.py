from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kummerlab import invgeo, tables
from kummerlab.groups import format_cycles, perm_on_polys
from kummerlab.invgeo import QI
from kummerlab.polygeom import MultiPoly, ProjPoint, ProjTransform

ROW_23_COMPUTED = "+-+---++--"


@pytest.fixture(scope="module")
def H():
    return invgeo.heisenberg()


@pytest.fixture(scope="module")
def lines(H):
    return invgeo.fixed_lines(H)


@pytest.fixture(scope="module")
def quads(H):
    return invgeo.invariant_quadrics(H)


@pytest.fixture(scope="module")
def sigma(H, lines):
    return invgeo.sigma_orbits(H, lines)


def test_lines_equal_table_in_order(lines):
    assert [L.key for L in lines] == invgeo.table_lines()
    assert len({L.key for L in lines}) == 30


def test_line_pairs_form_orbits(H, lines):
    for k in range(0, 30, 2):
        a, b = lines[k], lines[k + 1]
        assert a.fixing == b.fixing
        assert invgeo.lines_are_skew(a.key, b.key)
        assert invgeo.line_orbit(H, a.key) == {a.key, b.key}


def test_two_lines_per_involution(H, lines):
    for g in H.elements[1:]:
        assert len(invgeo.eigen_lines(g)) == 2


def test_quadrics_equal_table_and_are_smooth(quads):
    table_q = [MultiPoly.parse(q, QI) for q in tables.QUADRICS]
    assert len(quads) == 10
    assert all(q.proportionality(Q.form) is not None for q, Q in zip(table_q, quads))
    assert all(Q.is_smooth() for Q in quads)
    assert len({tuple(sorted(Q.character.items())) for Q in quads}) == 10


def test_incidence_table(lines, quads):
    text = invgeo.table_as_text(invgeo.incidence_table(lines, quads))
    diff = [k + 1 for k in range(30) if text[k] != tables.INCIDENCE[k]]
    assert diff == [23]
    assert text[22] == ROW_23_COMPUTED
    # the tabulated row has five incidences, the other rows four
    assert tables.INCIDENCE[22].count("+") == 5
    summ = invgeo.incidence_summary(invgeo.incidence_table(lines, quads))
    assert set(summ.row_sums) == {4} and set(summ.column_sums) == {12} and set(summ.pair_meets) == {4}


def test_sigma(sigma):
    assert [frozenset(o.points) for o in sigma.orbits] == invgeo.table_sigma()
    assert len(sigma.orbits) == 15 and all(len(o.points) == 4 for o in sigma.orbits)
    assert set(sigma.points_per_line) == {6}
    assert set(sigma.lines_per_point.values()) == {3}


def test_classify_examples(H, lines, sigma):
    c = invgeo.classify_orbit_length(H, ProjPoint.parse(["0", "0", "1", "5"], QI), lines, sigma.orbits)
    assert (c.length, c.where) == (8, "line 1")
    c = invgeo.classify_orbit_length(H, ProjPoint.parse(["1", "2", "3", "5"], QI), lines, sigma.orbits)
    assert (c.length, c.where) == (16, "generic")
    c = invgeo.classify_orbit_length(H, sigma.orbits[0].points[0], lines, sigma.orbits)
    assert (c.length, c.where) == (4, "Sigma 1")


def test_random_points_deterministic(H, lines, sigma):
    pts = invgeo.random_points(lines, sigma.orbits, 30, seed=2024)
    assert pts == invgeo.random_points(lines, sigma.orbits, 30, seed=2024)
    assert all(invgeo.classify_orbit_length(H, p, lines, sigma.orbits).consistent for p in pts)


def test_normalizer_permutes_lines_and_quadrics(lines, quads):
    B = {k: ProjTransform.parse(tables.MATRICES[k], QI) for k in ("B1", "B2")}
    forms = [Q.form for Q in quads]
    for g in B.values():
        assert invgeo.permutes_lines(g, lines)
        assert invgeo.permutes_quadrics(g, quads)
    assert format_cycles(perm_on_polys(B["B1"], forms)) == "(1 2)(3 4)(7 10)"
    assert format_cycles(perm_on_polys(B["B2"], forms)) == "(1 3 2 5 6)(4 8 10 7 9)"


gauss = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).map(lambda ab: QI.parse(f"{ab[0]}+{ab[1]}*i"))


@given(st.lists(gauss, min_size=4, max_size=4).filter(lambda v: any(not x.is_zero() for x in v)))
def test_trichotomy_generic_points(H, lines, sigma, coords):
    assert invgeo.classify_orbit_length(H, ProjPoint(coords), lines, sigma.orbits).consistent


@given(st.integers(0, 29), st.integers(-6, 6), st.integers(-6, 6))
def test_trichotomy_points_on_lines(H, lines, sigma, k, a, b):
    if a == 0 and b == 0:
        return
    p1, p2 = lines[k].points_basis()
    p = ProjPoint([x * a + y * b for x, y in zip(p1.coords, p2.coords)])
    c = invgeo.classify_orbit_length(H, p, lines, sigma.orbits)
    assert c.consistent and c.length in (4, 8)
