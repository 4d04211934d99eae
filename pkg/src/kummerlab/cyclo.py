"""Elements of the cyclotomic field Q(zeta_n) in the power basis.

An element is stored as an integer coefficient vector of length phi(n)
together with one positive common denominator.  All arithmetic reduces
modulo the n-th cyclotomic polynomial, so equal elements have equal
representations.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients, den monic)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q = num[k + len(den) - 1]
        out[k] = q
        if q:
            for j, c in enumerate(den):
                num[k + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CycloData:
    """Precomputed reduction and Galois tables for one cyclotomic order."""

    def __init__(self, n: int):
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        d = len(self.phi) - 1
        self.degree = d
        # powers[m] = zeta^m reduced, for 0 <= m < n
        powers = []
        cur = [1] + [0] * (d - 1) if d else []
        for _ in range(n):
            powers.append(tuple(cur))
            top = cur[-1] if d else 0
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.phi[j]
        self.powers = powers
        self.units = tuple(k for k in range(1, n + 1) if gcd(k, n) == 1 and k <= n)
        if n == 1:
            self.units = (1,)

    def power(self, m: int) -> tuple[int, ...]:
        return self.powers[m % self.n]


@lru_cache(maxsize=None)
def cyclo_data(n: int) -> CycloData:
    return CycloData(n)


def _normalize(coeffs: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        coeffs = [-c for c in coeffs]
        den = -den
    g = gcd(den, *coeffs)
    if g > 1:
        coeffs = [c // g for c in coeffs]
        den //= g
    return tuple(coeffs), den


class Cyc:
    """Immutable element of Q(zeta_n)."""

    __slots__ = ("n", "c", "den", "_hash")

    def __init__(self, n: int, coeffs, den: int = 1, _normalized: bool = False):
        self.n = n
        if _normalized:
            self.c = coeffs
            self.den = den
        else:
            self.c, self.den = _normalize(list(coeffs), den)
        self._hash = None

    # construction helpers
    @classmethod
    def from_fraction(cls, n: int, q) -> Cyc:
        q = Fraction(q)
        d = cyclo_data(n).degree
        return cls(n, [q.numerator] + [0] * (d - 1), q.denominator)

    @classmethod
    def zeta_power(cls, n: int, m: int) -> Cyc:
        return cls(n, cyclo_data(n).power(m), 1, _normalized=True)

    @classmethod
    def zero(cls, n: int) -> Cyc:
        return cls(n, (0,) * cyclo_data(n).degree, 1, _normalized=True)

    @classmethod
    def one(cls, n: int) -> Cyc:
        return cls.from_fraction(n, 1)

    # predicates
    def is_zero(self) -> bool:
        return not any(self.c)

    def is_one(self) -> bool:
        return self.den == 1 and self.c[0] == 1 and not any(self.c[1:])

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.c[0], self.den)

    def coefficients(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.c]

    # arithmetic
    def __add__(self, other: Cyc) -> Cyc:
        if self.den == other.den:
            return Cyc(self.n, [a + b for a, b in zip(self.c, other.c)], self.den)
        d1, d2 = self.den, other.den
        return Cyc(self.n, [a * d2 + b * d1 for a, b in zip(self.c, other.c)], d1 * d2)

    def __sub__(self, other: Cyc) -> Cyc:
        return self + (-other)

    def __neg__(self) -> Cyc:
        return Cyc(self.n, tuple(-a for a in self.c), self.den, _normalized=True)

    def __mul__(self, other: Cyc) -> Cyc:
        a, b = self.c, other.c
        d = len(a)
        if d == 1:
            return Cyc(self.n, [a[0] * b[0]], self.den * other.den)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        data = cyclo_data(self.n)
        for m in range(d, 2 * d - 1):
            v = conv[m]
            if v:
                for j, p in enumerate(data.power(m)):
                    if p:
                        out[j] += v * p
        return Cyc(self.n, out, self.den * other.den)

    def scale(self, q) -> Cyc:
        q = Fraction(q)
        return Cyc(self.n, [c * q.numerator for c in self.c], self.den * q.denominator)

    def conjugate(self, k: int) -> Cyc:
        """Image under the Galois automorphism zeta -> zeta^k."""
        if k % self.n == 1 % self.n:
            return self
        data = cyclo_data(self.n)
        out = [0] * data.degree
        for j, x in enumerate(self.c):
            if x:
                for i, p in enumerate(data.power(j * k)):
                    if p:
                        out[i] += x * p
        return Cyc(self.n, out, self.den)

    def norm(self) -> Fraction:
        prod = self
        for k in cyclo_data(self.n).units:
            if k != 1:
                prod = prod * self.conjugate(k)
        return prod.to_fraction()

    def inverse(self) -> Cyc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if len(self.c) == 1:
            return Cyc(self.n, [self.den], self.c[0])
        others = None
        for k in cyclo_data(self.n).units:
            if k != 1:
                conj = self.conjugate(k)
                others = conj if others is None else others * conj
        nrm = (self * others).to_fraction()
        return others.scale(1 / nrm)

    def __truediv__(self, other: Cyc) -> Cyc:
        return self * other.inverse()

    def __pow__(self, e: int) -> Cyc:
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyc.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Cyc) and self.n == other.n and self.den == other.den and self.c == other.c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.c, self.den))
        return self._hash

    def sign(self) -> int:
        """Sign of the first nonzero power-basis coordinate (0 for zero)."""
        for x in self.c:
            if x:
                return 1 if x > 0 else -1
        return 0

    def height(self) -> int:
        return max([abs(x) for x in self.c] + [self.den])

    def format(self) -> str:
        """Canonical text in the expression grammar."""
        if self.is_zero():
            return "0"
        if self.n in (1, 2) or self.is_rational():
            q = self.coefficients()[0]
            return str(q)
        gen = "i" if self.n == 4 else f"z{self.n}"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            x = self.c[k]
            if not x:
                continue
            if k == 0:
                mono = str(abs(x))
            else:
                mono = gen if k == 1 else f"{gen}^{k}"
                if abs(x) != 1:
                    mono = f"{abs(x)}*{mono}"
            sign = "-" if x < 0 else "+"
            terms.append((sign, mono))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, mono in terms[1:]:
            text += sign + mono
        if self.den != 1:
            if len(terms) > 1:
                text = f"({text})"
            text += f"/{self.den}"
        return text

    def __repr__(self) -> str:
        return f"Cyc({self.n}, {self.format()})"

    def __str__(self) -> str:
        return self.format()


def embed_cyc(x: Cyc, order: int) -> Cyc:
    """Image of x under Q(zeta_n) -> Q(zeta_N), zeta_n -> zeta_N^(N/n)."""
    if order == x.n:
        return x
    if order % x.n:
        raise ValueError(f"Q(zeta_{x.n}) does not embed in Q(zeta_{order})")
    step = order // x.n
    data = cyclo_data(order)
    out = [0] * data.degree
    for j, c in enumerate(x.c):
        if c:
            for i, p in enumerate(data.power(j * step)):
                if p:
                    out[i] += c * p
    return Cyc(order, out, x.den)
