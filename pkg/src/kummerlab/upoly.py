"""Dense univariate polynomials over Q(zeta_n).

A polynomial is a tuple of Cyc coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""
from __future__ import annotations

from .cyclo import Cyc

UPoly = tuple


def strip(p) -> UPoly:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return tuple(p)


def const(c: Cyc) -> UPoly:
    return () if c.is_zero() else (c,)


def degree(p: UPoly) -> int:
    return len(p) - 1


def add(p: UPoly, q: UPoly) -> UPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] = out[k] + c
    return strip(out)


def neg(p: UPoly) -> UPoly:
    return tuple(-c for c in p)


def sub(p: UPoly, q: UPoly) -> UPoly:
    return add(p, neg(q))


def mul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return ()
    if len(p) == 1:
        return strip(p[0] * c for c in q)
    if len(q) == 1:
        return strip(c * q[0] for c in p)
    out = [None] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            term = a * b
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    zero = Cyc.zero(p[0].n)
    return strip(zero if c is None else c for c in out)


def scale(p: UPoly, c: Cyc) -> UPoly:
    if c.is_zero():
        return ()
    return tuple(a * c for a in p)


def monic(p: UPoly) -> UPoly:
    if not p or p[-1].is_one():
        return p
    inv = p[-1].inverse()
    return tuple(a * inv for a in p[:-1]) + (Cyc.one(p[0].n),)


def divmod_(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if len(q) > len(p):
        return (), p
    n = q[0].n
    inv = q[-1].inverse()
    rem = list(p)
    quo = [Cyc.zero(n)] * (len(p) - len(q) + 1)
    dq = len(q) - 1
    for k in range(len(p) - 1, dq - 1, -1):
        c = rem[k]
        if c.is_zero():
            continue
        f = c * inv
        quo[k - dq] = f
        for j in range(dq + 1):
            rem[k - dq + j] = rem[k - dq + j] - f * q[j]
    return strip(quo), strip(rem[:dq])


def gcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic greatest common divisor (empty tuple when both are zero)."""
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def evaluate(p: UPoly, x: Cyc) -> Cyc:
    if not p:
        return Cyc.zero(x.n)
    acc = p[-1]
    for c in reversed(p[:-1]):
        acc = acc * x + c
    return acc


def derivative(p: UPoly) -> UPoly:
    return strip(c.scale(k) for k, c in enumerate(p) if k > 0)


def sqrt_poly(p: UPoly, lead_root: Cyc) -> UPoly | None:
    """Square root of p whose leading coefficient is lead_root, or None."""
    if not p:
        return ()
    if len(p) % 2 == 0:
        return None
    m = (len(p) - 1) // 2
    root = [None] * (m + 1)
    root[m] = lead_root
    inv2 = (lead_root + lead_root).inverse()
    # the coefficient of y^(m+k) in root^2 is linear in root[k] given the higher ones
    for k in range(m - 1, -1, -1):
        acc = p[m + k]
        for i in range(k + 1, m):
            acc = acc - root[i] * root[m + k - i]
        root[k] = acc * inv2
    root = strip(root)
    if mul(root, root) == p:
        return root
    return None
