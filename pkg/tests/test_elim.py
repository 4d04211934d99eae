from __future__ import annotations

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from kummerlab import upoly
from kummerlab.cyclo import Cyc
from kummerlab.elim import binary_discriminant_nonzero, interpolate, rational_roots, sylvester_resultant


def c(q, n=1):
    return Cyc.from_fraction(n, Fraction(q))


def poly_from_roots(roots):
    p = (c(1),)
    for r in roots:
        p = upoly.mul(p, (c(-r), c(1)))
    return list(p)


def test_resultant_examples():
    # Res(x - a, x - b) = b - a up to sign
    assert sylvester_resultant([c(-2), c(1)], [c(-5), c(1)], 1, 1) in (c(3), c(-3))
    assert sylvester_resultant([c(-2), c(1)], [c(-2), c(1)], 1, 1).is_zero()
    assert sylvester_resultant([c(3)], [c(1), c(1)], 0, 1) == c(3)


def test_binary_discriminant():
    # u^2 v^2 has a double root; u^4 - v^4 has four distinct roots over C
    assert not binary_discriminant_nonzero([c(0), c(0), c(1), c(0), c(0)])
    assert binary_discriminant_nonzero([c(-1), c(0), c(0), c(0), c(1)])
    assert not binary_discriminant_nonzero([c(0)] * 5)


def test_rational_roots():
    p = poly_from_roots([Fraction(1, 2), Fraction(-3), Fraction(0)])
    assert rational_roots(p, 8) == [Fraction(-3), Fraction(0), Fraction(1, 2)]
    assert rational_roots([c(-2), c(0), c(1)], 8) == []


roots = st.lists(st.integers(-5, 5), min_size=1, max_size=4)


@given(roots, roots)
def test_resultant_vanishes_iff_common_root(a, b):
    p, q = poly_from_roots(a), poly_from_roots(b)
    r = sylvester_resultant(p, q, len(a), len(b))
    assert r.is_zero() == bool(set(a) & set(b))


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_interpolation_round_trip(coeffs):
    p = upoly.strip([c(x) for x in coeffs])
    xs = [c(k) for k in range(len(coeffs))]
    ys = [upoly.evaluate(p, x) for x in xs]
    assert upoly.strip(list(interpolate(xs, ys))) == p
