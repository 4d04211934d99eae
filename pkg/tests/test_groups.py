from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kummerlab import groups, tables
from kummerlab.exactnum import FieldDescriptor
from kummerlab.groups import (
    LiftedElement,
    SignCharacter,
    WordSyntaxError,
    check_word_relations,
    close,
    evaluate_word,
    format_cycles,
    group_profile,
    lift_by_character,
    orbit,
    perm_on_polys,
)
from kummerlab.kummer import KummerParams, quartic_form
from kummerlab.polygeom import MultiPoly, ProjPoint, ProjTransform

Q = FieldDescriptor(1)
QI = FieldDescriptor(4)


def mats(names, desc=Q):
    return {k: ProjTransform.parse(tables.MATRICES[k], desc) for k in names}


H4 = ("A1", "A2", "A3", "A4")


@pytest.fixture(scope="module")
def H():
    return close(mats(H4))


def test_heisenberg_profile(H):
    prof = group_profile(H)
    assert (prof.order, prof.exponent, prof.center_order) == (16, 2, 16)
    assert prof.histogram == {1: 1, 2: 15}


def test_close_examples():
    assert close(mats(H4 + ("A5",))).order == 48
    assert close([ProjTransform.identity(Q)]).order == 1
    with pytest.raises(groups.GroupTooLarge):
        close(mats(H4), cap=10)


def test_orbit_examples(H):
    o = orbit(H, ProjPoint.parse(["1", "0", "0", "0"], Q))
    assert {p.format() for p in o.points} == {"[1:0:0:0]", "[0:1:0:0]", "[0:0:1:0]", "[0:0:0:1]"}
    assert len(orbit(H, ProjPoint.parse(["1", "2", "3", "5"], Q)).points) == 16
    assert len(orbit(H, ProjPoint.parse(["0", "0", "1", "5"], Q)).points) == 8


def test_relations():
    B = mats(("B1", "B2"), QI)
    assert all(r.holds for r in check_word_relations(B, tables.NORMALIZER_RELATIONS))
    Hi = close(mats(H4, QI))
    assert all(r.holds for r in check_word_relations(B, tables.NORMALIZER_RELATIONS_MOD_H, modulo=Hi))
    assert check_word_relations(mats(("A1",)), ["A1^2"])[0].holds
    assert not check_word_relations(B, ["B1"])[0].holds
    assert evaluate_word("[B1,B2]", B) == B["B1"].inverse() * B["B2"].inverse() * B["B1"] * B["B2"]
    with pytest.raises(WordSyntaxError):
        evaluate_word("B1^", B)
    with pytest.raises(groups.UnknownGenerator):
        evaluate_word("C7", B)


def test_permutations_of_sextet_quartics():
    B = mats(("B1", "B2"), QI)
    forms = [MultiPoly.parse(f, QI) for f in tables.SEXTET_QUARTICS]
    assert format_cycles(perm_on_polys(B["B1"], forms)) == "(1 2)(3 4)(5 6)"
    assert format_cycles(perm_on_polys(B["B2"], forms)) == "(1 2 6 3 5)"
    assert format_cycles(perm_on_polys(ProjTransform.identity(QI), forms)) == "()"


def test_group_orders_of_presets():
    from kummerlab.presets import load_preset

    assert close(load_preset("example-48-50-t0").generators()).order == 192
    assert close(load_preset("example-48-50-ti").generators()).order == 384
    assert close(load_preset("example-z5").generators()).order == 80
    assert close(load_preset("example-48-50").generators()).order == 96


def family_F(desc=Q, t="2"):
    tt = desc.parse(t)
    p = KummerParams.parse({"a": "2", "b": "-t^2-1", "c": "-t^2-1", "d": "-t^2-1", "e": "t^3+3*t"}, desc, {"t": tt})
    return quartic_form(p)


def test_character_lifts(H):
    F = family_F()
    trivial = lift_by_character(H, F, SignCharacter(tables.RHO_TRIVIAL))
    mixed = lift_by_character(H, F, SignCharacter(tables.RHO_MIXED))
    assert trivial.order == mixed.order == 16
    assert not trivial.contains_deck_involution() and not mixed.contains_deck_involution()
    # forgetting w recovers H exactly
    assert {e.matrix for e in trivial.elements} == set(H.elements)
    assert {e.matrix for e in mixed.elements} == set(H.elements)
    # two names for the same involution with opposite signs cannot be a homomorphism
    A1 = mats(("A1",))["A1"]
    G = close({"x": A1, "y": A1})
    with pytest.raises(ValueError):
        lift_by_character(G, F, SignCharacter({"x": -1, "y": 1}))


def test_lifted_element_scaling():
    M = [[Q.from_int(2), Q.zero()], [Q.zero(), Q.from_int(2)]]
    e = LiftedElement.make(M, Q.from_int(4))
    assert e.is_identity()
    d = LiftedElement.make(M, Q.from_int(-4))
    assert d.is_deck_involution()


def test_z5_lift_avoiding_deck():
    from kummerlab.presets import load_preset

    P = load_preset("example-z5")
    F = P.surface().F
    gens = P.generators()
    trivial = groups.lift_group(F, gens, {}, require_exact=False)
    assert trivial.order == 160 and trivial.contains_deck_involution()
    found = groups.lifts_avoiding_deck(F, gens)
    assert len(found) == 1
    signs, G = found[0]
    assert G.order == 80 and not G.contains_deck_involution()
    assert signs == {"A1": -1, "A2": 1, "A3": -1, "A4": -1, "B2": 1}


def test_invariance_scalar():
    F = family_F()
    A1 = mats(("A1",))["A1"]
    assert groups.invariance_scalar(F, A1) == Q.one()
    swap = ProjTransform.parse(tables.MATRICES["SWAP01"], Q)
    assert groups.invariance_scalar(F, swap) is not None
    x0 = MultiPoly.var(Q, "x0")
    assert groups.invariance_scalar(x0 ** 4, swap) is None


points = st.lists(st.integers(-4, 4), min_size=4, max_size=4).filter(any)


@given(points)
def test_orbit_stabilizer(coords):
    G = close(mats(H4 + ("A5",)))
    p = ProjPoint([Q.from_int(c) for c in coords])
    o = orbit(G, p)
    stab = sum(1 for g in G.elements if g.apply(p) == p)
    assert stab == o.stabilizer_order
    assert stab * len(o.points) == G.order


@given(st.lists(points, min_size=1, max_size=4))
def test_orbits_partition(coord_lists):
    G = close(mats(H4))
    pts = set()
    for c in coord_lists:
        pts |= set(orbit(G, ProjPoint([Q.from_int(x) for x in c])).points)
    orbs = groups.orbits_of(G, pts)
    assert sum(len(o.points) for o in orbs) == len(pts)
    assert set().union(*(set(o.points) for o in orbs)) == pts
    assert all(G.order % len(o.points) == 0 for o in orbs)
