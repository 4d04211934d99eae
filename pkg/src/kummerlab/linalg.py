"""Exact dense linear algebra over FieldElement and over the integers."""
from __future__ import annotations

from .exactnum import FieldElement


def rref(rows: list[list[FieldElement]]) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(m)) if not m[k][col].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and not m[k][col].is_zero():
                f = m[k][col]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[list[FieldElement]]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        raise ValueError("nullspace of an empty system needs a descriptor")
    desc = rows[0][0].desc
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [desc.zero()] * ncols
        v[f] = desc.one()
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def det(rows) -> FieldElement:
    m = [list(r) for r in rows]
    n = len(m)
    desc = m[0][0].desc
    result = desc.one()
    for col in range(n):
        piv = next((k for k in range(col, n) if not m[k][col].is_zero()), None)
        if piv is None:
            return desc.zero()
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        p = m[col][col]
        result = result * p
        inv = p.inverse()
        for k in range(col + 1, n):
            if not m[k][col].is_zero():
                f = m[k][col] * inv
                m[k] = [a - f * b for a, b in zip(m[k], m[col])]
    return result


def inverse(rows) -> list[list[FieldElement]]:
    n = len(rows)
    desc = rows[0][0].desc
    aug = [list(r) + [desc.one() if i == j else desc.zero() for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a, b):
    return [[_dot(row, col) for col in zip(*b)] for row in a]


def matvec(a, v):
    return [_dot(row, v) for row in a]


def _dot(u, v):
    acc = None
    for x, y in zip(u, v):
        if x.is_zero() or y.is_zero():
            continue
        term = x * y
        acc = term if acc is None else acc + term
    return acc if acc is not None else u[0].desc.zero()


def int_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((k for k in range(r, nrows) if m[k][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for k in range(r + 1, nrows):
            f = m[k][col]
            m[k] = [(p * a - f * b) // prev for a, b in zip(m[k], m[r])]
        prev = p
        r += 1
        if r == nrows:
            break
    return r
