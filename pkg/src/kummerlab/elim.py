"""Resultants by Sylvester determinants, evaluation and interpolation.

Polynomials here are small dict/tuple structures with Cyc coefficients;
every determinant is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import upoly
from .cyclo import Cyc


def det_cyc(rows: list[list[Cyc]]) -> Cyc:
    """Determinant by Gaussian elimination over Q(zeta_n)."""
    m = [list(r) for r in rows]
    n = len(m)
    order = m[0][0].n
    result = Cyc.one(order)
    for col in range(n):
        piv = next((k for k in range(col, n) if not m[k][col].is_zero()), None)
        if piv is None:
            return Cyc.zero(order)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        p = m[col][col]
        result = result * p
        inv = p.inverse()
        for k in range(col + 1, n):
            if not m[k][col].is_zero():
                f = m[k][col] * inv
                m[k] = [a if b.is_zero() else a - f * b for a, b in zip(m[k], m[col])]
    return result


def sylvester_resultant(p: list[Cyc], q: list[Cyc], dp: int, dq: int) -> Cyc:
    """Res(p, q) with formal degrees dp, dq (coefficient lists ascending, padded)."""
    order = (p or q)[0].n
    zero = Cyc.zero(order)
    p = list(p) + [zero] * (dp + 1 - len(p))
    q = list(q) + [zero] * (dq + 1 - len(q))
    if dp == 0:
        return p[0] ** dq
    if dq == 0:
        return q[0] ** dp
    size = dp + dq
    rows = []
    for k in range(dq):
        row = [zero] * size
        for j in range(dp + 1):
            row[k + j] = p[dp - j]
        rows.append(row)
    for k in range(dp):
        row = [zero] * size
        for j in range(dq + 1):
            row[k + j] = q[dq - j]
        rows.append(row)
    return det_cyc(rows)


def interpolate(xs: list[Cyc], ys: list[Cyc]) -> tuple:
    """The polynomial of degree < len(xs) through the points (Newton form)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for k in range(n - 1, j - 1, -1):
            coef[k] = (coef[k] - coef[k - 1]) / (xs[k] - xs[k - j])
    poly = upoly.const(coef[-1])
    for k in range(n - 2, -1, -1):
        poly = upoly.add(upoly.mul(poly, (-xs[k], Cyc.one(xs[0].n))), upoly.const(coef[k]))
    return poly


def sample_points(order: int, count: int) -> list[Cyc]:
    return [Cyc.from_fraction(order, k) for k in range(count)]


def binary_discriminant_nonzero(coeffs: list[Cyc]) -> bool:
    """Whether the binary form sum c_k u^k v^(d-k) has d distinct roots in P^1.

    Uses Res(df/du, df/dv): it is a nonzero multiple of the discriminant
    for forms of degree d >= 2, and vanishes for the zero form.
    """
    d = len(coeffs) - 1
    if all(c.is_zero() for c in coeffs):
        return False
    du = [c.scale(k) for k, c in enumerate(coeffs)][1:]
    dv = [c.scale(d - k) for k, c in enumerate(coeffs)][:-1]
    return not sylvester_resultant(du, dv, d - 1, d - 1).is_zero()


def rational_roots(p: list[Cyc], height: int) -> list[Fraction]:
    """Rational roots num/den of p with |num|, den <= height."""
    p = upoly.strip(p)
    if not p or not all(c.is_rational() for c in p):
        return []
    qs = [c.to_fraction() for c in p]
    out = []
    while qs and qs[0] == 0:
        qs = qs[1:]
        if Fraction(0) not in out:
            out.append(Fraction(0))
    if len(qs) <= 1:
        return out
    scale = 1
    for q in qs:
        scale = scale * q.denominator // gcd(scale, q.denominator)
    ints = [int(q * scale) for q in qs]
    c0, lc = abs(ints[0]), abs(ints[-1])
    for den in range(1, height + 1):
        if lc % den:
            continue
        for num in range(1, height + 1):
            if c0 % num or gcd(num, den) != 1:
                continue
            for sgn in (1, -1):
                x = Fraction(sgn * num, den)
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * x + c
                if acc == 0:
                    out.append(x)
    return sorted(out)

