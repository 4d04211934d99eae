"""Roots in Q(zeta_n) of univariate polynomials over Q(zeta_n).

Uses Trager's norm method: shift until the norm down to Q is squarefree,
factor the norm over Q, and recover factors over the cyclotomic field by
gcd.  Only the integer factorization over Q is delegated to sympy.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

import sympy

from . import upoly
from .cyclo import Cyc, cyclo_data


def _compose_shift(p, c: Cyc):
    """p(y + c)."""
    lin = (c, Cyc.one(c.n))
    acc = ()
    for coeff in reversed(p):
        acc = upoly.add(upoly.mul(acc, lin), upoly.const(coeff))
    return acc


def field_norm(p) -> list[Fraction]:
    """Coefficients of prod over Galois conjugates of p; they are rational."""
    n = p[0].n
    prod = p
    for k in cyclo_data(n).units:
        if k != 1:
            prod = upoly.mul(prod, tuple(c.conjugate(k) for c in p))
    return [c.to_fraction() for c in prod]


def _to_sympy(coeffs: list[Fraction], var) -> sympy.Poly:
    den = lcm(*[q.denominator for q in coeffs])
    ints = [int(q * den) for q in coeffs]
    return sympy.Poly(list(reversed(ints)), var, domain="ZZ")


def _from_sympy(poly: sympy.Poly, n: int):
    return upoly.strip(Cyc.from_fraction(n, int(c)) for c in reversed(poly.all_coeffs()))


def roots_in_field(p) -> list[Cyc]:
    """All distinct roots of p lying in its coefficient field, in a stable order."""
    p = upoly.strip(p)
    if len(p) <= 1:
        return []
    n = p[0].n
    g = upoly.gcd(p, upoly.derivative(p))
    if len(g) > 1:
        p = upoly.divmod_(p, g)[0]
    p = upoly.monic(p)
    if len(p) == 2:
        return [-p[0]]
    y = sympy.Symbol("y")
    d = cyclo_data(n).degree
    zeta = Cyc.zeta_power(n, 1)
    shift = 0
    while True:
        c = zeta.scale(-shift) if shift else Cyc.zero(n)
        q = _compose_shift(p, c) if shift else p
        norm = _to_sympy(field_norm(q) if d > 1 else [x.to_fraction() for x in q], y)
        if norm.is_sqf:
            break
        shift = -shift if shift > 0 else -shift + 1
    roots = []
    _, factors = norm.factor_list()
    for f, _mult in factors:
        if f.degree() != d:
            continue
        h = upoly.gcd(q, _from_sympy(f, n))
        if len(h) == 2:
            # q(y) = p(y - shift*zeta)
            roots.append(-h[0] - zeta.scale(shift) if shift else -h[0])
    out = [r for r in roots if upoly.evaluate(p, r).is_zero()]
    return sorted(set(out), key=lambda r: r.format())


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def cyc_sqrt(x: Cyc) -> Cyc | None:
    """A square root of x in Q(zeta_n) with positive leading sign, or None."""
    if x.is_zero():
        return x
    n = x.n
    if cyclo_data(n).degree == 1:
        r = _rational_sqrt(x.to_fraction())
        return None if r is None else Cyc.from_fraction(n, r)
    if _rational_sqrt(x.norm()) is None:
        return None
    roots = roots_in_field((-x, Cyc.zero(n), Cyc.one(n)))
    if not roots:
        return None
    r = roots[0]
    return r if r.sign() > 0 else -r
